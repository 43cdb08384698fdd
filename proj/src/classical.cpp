#include "sgen/classical.hpp"

#include <sstream>

namespace sgen {

std::string gl_label(int i, int j) {
  std::ostringstream os;
  os << "e";
  if (i < 10 && j < 10) os << i << j;
  else os << i << "," << j;
  return os.str();
}

namespace {

struct GlTerm {
  int i, j;
  Rat c;
};

std::size_t gl_index(int i, int j, int size) {
  return static_cast<std::size_t>(i - 1) * size + (j - 1);
}

Element gl_element(const SuperAlgebra& gl, int size, const std::vector<GlTerm>& terms) {
  Vec v(gl.dim());
  for (const auto& t : terms) v[gl_index(t.i, t.j, size)] += t.c;
  return Element(gl, std::move(v));
}

bool is_diagonal_in_gl(const Element& x, int size) {
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      if (i != j && x.c[gl_index(i, j, size)] != 0) return false;
    }
  }
  return true;
}

/// Assembles a BuiltFamily from explicit gl elements; cartan = the diagonal
/// basis elements.
BuiltFamily finish_subalgebra(const FamilyId& id, std::shared_ptr<SuperAlgebra> gl,
                              int size, std::vector<Element> basis,
                              std::vector<std::string> labels) {
  BuiltFamily f;
  f.id = id;
  f.ambient = gl;
  f.alg = subalgebra_with_basis(*gl, basis, labels, id.display());
  f.basis_in_ambient = std::move(basis);
  std::vector<Vec> cartan;
  std::vector<std::string> clabels;
  for (std::size_t i = 0; i < f.alg->dim(); ++i) {
    if (is_diagonal_in_gl(f.basis_in_ambient[i], size)) {
      Vec v(f.alg->dim());
      v[i] = 1;
      cartan.push_back(std::move(v));
      clabels.push_back(labels[i]);
    }
  }
  f.alg->set_cartan(std::move(cartan), std::move(clabels));
  return f;
}

}  // namespace

std::shared_ptr<SuperAlgebra> build_gl(int r, int s) {
  int size = r + s;
  if (size < 1) throw usage_error("gl: r+s >= 1 required");
  std::vector<std::string> labels;
  std::vector<int> parity;
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      labels.push_back(gl_label(i, j));
      parity.push_back(((i <= r) != (j <= r)) ? 1 : 0);
    }
  }
  auto a = std::make_shared<SuperAlgebra>(
      "gl(" + std::to_string(r) + "|" + std::to_string(s) + ")", labels, parity);
  // [e_ab, e_cd] = d_bc e_ad - (-1)^{p p'} d_da e_cb
  for (int ai = 1; ai <= size; ++ai) {
    for (int b = 1; b <= size; ++b) {
      std::size_t idx1 = gl_index(ai, b, size);
      for (int c = 1; c <= size; ++c) {
        for (int d = 1; d <= size; ++d) {
          std::size_t idx2 = gl_index(c, d, size);
          if (idx2 < idx1) continue;
          Vec acc(a->dim());
          if (b == c) acc[gl_index(ai, d, size)] += 1;
          Rat sgn = (parity[idx1] && parity[idx2]) ? 1 : -1;
          if (d == ai) acc[gl_index(c, b, size)] += sgn;
          SparseVec sv;
          for (std::size_t k = 0; k < acc.size(); ++k)
            if (acc[k] != 0) sv.emplace_back(k, acc[k]);
          if (!sv.empty()) a->set_entry(idx1, idx2, std::move(sv));
        }
      }
    }
  }
  std::vector<Vec> cartan;
  std::vector<std::string> clabels;
  for (int i = 1; i <= size; ++i) {
    Vec v(a->dim());
    v[gl_index(i, i, size)] = 1;
    cartan.push_back(std::move(v));
    clabels.push_back(gl_label(i, i));
  }
  a->set_cartan(std::move(cartan), std::move(clabels));
  return a;
}

Rat supertrace(const Element& x, int r, int s) {
  int size = r + s;
  Rat t = 0;
  for (int i = 1; i <= size; ++i) {
    const Rat& v = x.c[gl_index(i, i, size)];
    t += (i <= r) ? v : -v;
  }
  return t;
}

BuiltFamily build_sl(int r, int s, const std::string& name) {
  int size = r + s;
  auto gl = build_gl(r, s);
  std::vector<Element> basis;
  std::vector<std::string> labels;
  auto sign = [&](int i) { return i <= r ? 1 : -1; };
  for (int k = 1; k < size; ++k) {
    // e_kk - p_k p_{k+1} e_{k+1,k+1}: supertrace zero by construction
    Rat c = -sign(k) * sign(k + 1);
    basis.push_back(gl_element(*gl, size, {{k, k, 1}, {k + 1, k + 1, c}}));
    labels.push_back(basis.back().pretty());
  }
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      if (i == j) continue;
      basis.push_back(gl_element(*gl, size, {{i, j, 1}}));
      labels.push_back(gl_label(i, j));
    }
  }
  FamilyId id{Kind::A, {r - 1, s - 1}};
  BuiltFamily f = finish_subalgebra(id, gl, size, std::move(basis), std::move(labels));
  f.alg->set_name(name);
  return f;
}

namespace {

void record_block_split(BuiltFamily& f, int size, int r) {
  // odd part of a matrix realization splits into upper-right / lower-left
  std::vector<std::size_t> upper, lower;
  for (std::size_t k = 0; k < f.alg->dim(); ++k) {
    if (f.alg->parity_of(k) == 0) continue;
    bool up = false, low = false;
    for (int i = 1; i <= size; ++i) {
      for (int j = 1; j <= size; ++j) {
        if (f.basis_in_ambient[k].c[gl_index(i, j, size)] == 0) continue;
        if (i <= r && j > r) up = true;
        if (i > r && j <= r) low = true;
      }
    }
    if (up && !low) upper.push_back(k);
    else if (low && !up) lower.push_back(k);
  }
  f.odd_components = {upper, lower};
}

Element map_to_ambient(const BuiltFamily& parent, const Element& x) {
  Vec v(parent.ambient->dim());
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] += x.c[i] * parent.basis_in_ambient[i].c[j];
  }
  return Element(*parent.ambient, std::move(v));
}

/// Quotients a parent build by the span of `center` (a parent element) and
/// carries the ambient metadata over to the section representatives.
BuiltFamily quotient_family(const FamilyId& id, BuiltFamily parent,
                            const Element& center_in_ambient, int size) {
  SpanSolver solver(
      [&] {
        std::vector<Vec> rows;
        for (const auto& b : parent.basis_in_ambient) rows.push_back(b.c);
        return rows;
      }(),
      parent.ambient->dim());
  auto coords = solver.express(center_in_ambient.c);
  if (!coords) throw usage_error("quotient center outside the parent algebra");
  Subspace kernel(parent.alg->dim());
  kernel.insert(*coords);
  QuotientMap qm = quotient_by_ideal(parent.alg, kernel);
  qm.quotient->set_name(id.display());

  BuiltFamily f;
  f.id = id;
  f.alg = qm.quotient;
  f.ambient = parent.ambient;
  for (const auto& s : qm.section)
    f.basis_in_ambient.push_back(map_to_ambient(parent, s));
  f.quot = std::make_shared<QuotientMap>(std::move(qm));
  std::vector<Vec> cartan;
  std::vector<std::string> clabels;
  for (std::size_t i = 0; i < f.alg->dim(); ++i) {
    if (is_diagonal_in_gl(f.basis_in_ambient[i], size)) {
      Vec v(f.alg->dim());
      v[i] = 1;
      cartan.push_back(std::move(v));
      clabels.push_back(f.alg->labels()[i]);
    }
  }
  f.alg->set_cartan(std::move(cartan), std::move(clabels));
  return f;
}

}  // namespace

BuiltFamily build_A(int m, int n) {
  if (m < 0 || n < 0 || (m == 0 && n == 0))
    throw usage_error("A(m,n): m,n >= 0 and not both zero");
  FamilyId id{Kind::A, {m, n}};
  if (m != n) {
    BuiltFamily f = build_sl(m + 1, n + 1, id.display());
    f.id = id;
    record_block_split(f, m + n + 2, m + 1);
    return f;
  }
  // A(n,n): sl(n+1|n+1) with the diagonal basis chosen so that the quotient
  // section matches the coset representatives e11+e_{n+1+j,n+1+j}.
  int size = 2 * n + 2;
  auto gl = build_gl(n + 1, n + 1);
  std::vector<Element> basis;
  std::vector<std::string> labels;
  for (int j = 1; j <= n + 1; ++j) {
    basis.push_back(gl_element(*gl, size, {{1, 1, 1}, {n + 1 + j, n + 1 + j, 1}}));
    labels.push_back(basis.back().pretty());
  }
  for (int i = 2; i <= n + 1; ++i) {
    basis.push_back(gl_element(*gl, size, {{i, i, 1}, {n + 2, n + 2, 1}}));
    labels.push_back(basis.back().pretty());
  }
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= size; ++j) {
      if (i == j) continue;
      basis.push_back(gl_element(*gl, size, {{i, j, 1}}));
      labels.push_back(gl_label(i, j));
    }
  }
  FamilyId slid{Kind::A, {n, n}};
  BuiltFamily parent =
      finish_subalgebra(slid, gl, size, std::move(basis), std::move(labels));
  parent.alg->set_name("sl(" + std::to_string(n + 1) + "|" + std::to_string(n + 1) + ")");
  Element center = gl_element(*gl, size, [&] {
    std::vector<GlTerm> t;
    for (int i = 1; i <= size; ++i) t.push_back({i, i, 1});
    return t;
  }());
  BuiltFamily f = quotient_family(id, std::move(parent), center, size);
  record_block_split(f, size, n + 1);
  return f;
}

BuiltFamily build_osp(int M, int twoN, const FamilyId& id) {
  if (M < 1 || twoN < 2 || twoN % 2 != 0) throw usage_error("osp: bad parameters");
  int N = twoN / 2;
  int size = M + twoN;
  auto gl = build_gl(M, twoN);
  // Bilinear form F = diag(G, J): G anti-diagonal symmetric on the even
  // block, J anti-diagonal symplectic on the odd block.
  auto F = [&](int i, int j) -> Rat {
    if (i <= M && j <= M) return i + j == M + 1 ? 1 : 0;
    if (i > M && j > M) {
      int a = i - M, b = j - M;
      if (a + b != twoN + 1) return 0;
      return a <= N ? 1 : -1;
    }
    return 0;
  };
  auto parity_of_index = [&](int i) { return i > M ? 1 : 0; };

  std::vector<Element> basis;
  std::vector<std::string> labels;
  for (int sector = 0; sector <= 1; ++sector) {
    // unknown entries of the given parity, row-major
    std::vector<std::pair<int, int>> unknowns;
    for (int i = 1; i <= size; ++i)
      for (int j = 1; j <= size; ++j)
        if (((parity_of_index(i) + parity_of_index(j)) % 2) == sector)
          unknowns.emplace_back(i, j);
    // constraint rows: (X^T F)_{ij} + (-1)^{sector * p_i} (F X)_{ij} = 0
    Matrix cons(size * size, unknowns.size());
    for (int i = 1; i <= size; ++i) {
      for (int j = 1; j <= size; ++j) {
        std::size_t row = (i - 1) * size + (j - 1);
        Rat sgn = (sector && parity_of_index(i)) ? -1 : 1;
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
          auto [a, b] = unknowns[u];
          Rat coef = 0;
          if (b == i) coef += F(a, j);        // (X^T F)_{ij}, k = a
          if (b == j) coef += sgn * F(i, a);  // (F X)_{ij}, k = a
          cons.at(row, u) = coef;
        }
      }
    }
    for (const auto& v : nullspace(cons)) {
      Vec w(gl->dim());
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        auto [a, b] = unknowns[u];
        w[gl_index(a, b, size)] = v[u];
      }
      basis.emplace_back(*gl, std::move(w));
      labels.push_back(basis.back().pretty());
    }
  }
  return finish_subalgebra(id, gl, size, std::move(basis), std::move(labels));
}

BuiltFamily build_P(int n) {
  if (n < 2) throw usage_error("P(n): n >= 2 required");
  FamilyId id{Kind::P, {n}};
  int size = 2 * n + 2;
  auto gl = build_gl(n + 1, n + 1);
  std::vector<Element> basis;
  std::vector<std::string> labels;
  std::vector<std::size_t> odd_b, odd_c;
  auto push = [&](const std::vector<GlTerm>& terms) {
    basis.push_back(gl_element(*gl, size, terms));
    labels.push_back(basis.back().pretty());
    return basis.size() - 1;
  };
  for (int j = 2; j <= n + 1; ++j)
    push({{1, 1, 1}, {j, j, -1}, {n + 2, n + 2, -1}, {n + 1 + j, n + 1 + j, 1}});
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j)
      if (i != j) push({{i, j, 1}, {n + 1 + j, n + 1 + i, -1}});
  for (int i = 1; i <= n + 1; ++i) odd_b.push_back(push({{i, n + 1 + i, 1}}));
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j)
      odd_b.push_back(push({{i, n + 1 + j, 1}, {j, n + 1 + i, 1}}));
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j)
      odd_c.push_back(push({{n + 1 + i, j, 1}, {n + 1 + j, i, -1}}));
  BuiltFamily f = finish_subalgebra(id, gl, size, std::move(basis), std::move(labels));
  f.odd_components = {odd_b, odd_c};
  return f;
}

BuiltFamily build_Q_tilde(int n) {
  if (n < 2) throw usage_error("Q(n): n >= 2 required");
  int size = 2 * n + 2;
  auto gl = build_gl(n + 1, n + 1);
  std::vector<Element> basis;
  std::vector<std::string> labels;
  auto push = [&](const std::vector<GlTerm>& terms) {
    basis.push_back(gl_element(*gl, size, terms));
    labels.push_back(basis.back().pretty());
  };
  for (int i = 1; i <= n + 1; ++i) push({{i, i, 1}, {n + 1 + i, n + 1 + i, 1}});
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j)
      if (i != j) push({{i, j, 1}, {n + 1 + i, n + 1 + j, 1}});
  for (int i = 2; i <= n + 1; ++i)
    push({{1, n + 2, 1}, {n + 2, 1, 1}, {i, n + 1 + i, -1}, {n + 1 + i, i, -1}});
  for (int j = 1; j <= n + 1; ++j)
    for (int k = 1; k <= n + 1; ++k)
      if (j != k) push({{j, n + 1 + k, 1}, {n + 1 + j, k, 1}});
  FamilyId qtid{Kind::Q, {n}};
  BuiltFamily f = finish_subalgebra(qtid, gl, size, std::move(basis), std::move(labels));
  f.alg->set_name("Q~(" + std::to_string(n) + ")");
  return f;
}

BuiltFamily build_Q(int n) {
  BuiltFamily parent = build_Q_tilde(n);
  int size = 2 * n + 2;
  Element center = [&] {
    Vec v(parent.ambient->dim());
    for (int i = 1; i <= size; ++i) v[gl_index(i, i, size)] = 1;
    return Element(*parent.ambient, std::move(v));
  }();
  FamilyId id{Kind::Q, {n}};
  return quotient_family(id, std::move(parent), center, size);
}

}  // namespace sgen
