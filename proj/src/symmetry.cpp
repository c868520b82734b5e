#include "ybeacc/symmetry.hpp"

#include <deque>
#include <utility>

namespace ybeacc {

std::string SymmetryWord::to_string() const {
  if (letters.empty()) return "e";
  std::string s;
  for (Letter l : letters) s += l == Letter::T ? 'T' : l == Letter::L ? 'L' : 'Z';
  return s;
}

SymmetryWord SymmetryWord::parse(std::string_view s) {
  SymmetryWord w;
  if (s == "e") return w;
  for (char c : s) {
    switch (c) {
      case 'T': w.letters.push_back(Letter::T); break;
      case 'L': w.letters.push_back(Letter::L); break;
      case 'Z': w.letters.push_back(Letter::Z); break;
      default: throw Error(ErrorCode::InvalidInput, "symmetry letters are T, L, Z");
    }
  }
  return w;
}

namespace {

// P on rlex indices: |ij> at i+3j goes to |ji> at j+3i.
const std::vector<std::size_t> kSwap{0, 3, 6, 1, 4, 7, 2, 5, 8};
const std::vector<std::size_t> kFlip{8, 7, 6, 5, 4, 3, 2, 1, 0};

void swap_fields(AccParams& p, Complex AccParams::*a, Complex AccParams::*b) { std::swap(p.*a, p.*b); }

}  // namespace

Matrix apply(Letter l, const Matrix& m) {
  if (m.side() != 9) throw Error(ErrorCode::DimensionMismatch, "symmetry acts on 9x9 matrices");
  switch (l) {
    case Letter::T: return transpose(m);
    case Letter::L: return permute(m, kSwap);
    case Letter::Z: return permute(m, kFlip);
  }
  return m;
}

Matrix apply(const SymmetryWord& w, const Matrix& m) {
  Matrix out = m;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = apply(*it, out);
  if (w.scale != Complex(1.0, 0.0)) out *= w.scale;
  return out;
}

AccParams apply(Letter l, const AccParams& in) {
  AccParams p = in;
  using A = AccParams;
  switch (l) {
    case Letter::T:
      swap_fields(p, &A::b12, &A::c12);
      swap_fields(p, &A::b13, &A::c13);
      swap_fields(p, &A::b23, &A::c23);
      swap_fields(p, &A::x1, &A::x2);
      swap_fields(p, &A::x3, &A::x4);
      break;
    case Letter::L:
      swap_fields(p, &A::a12, &A::d12);
      swap_fields(p, &A::a13, &A::d13);
      swap_fields(p, &A::a23, &A::d23);
      swap_fields(p, &A::b12, &A::c12);
      swap_fields(p, &A::b13, &A::c13);
      swap_fields(p, &A::b23, &A::c23);
      swap_fields(p, &A::x1, &A::x4);
      swap_fields(p, &A::x2, &A::x3);
      break;
    case Letter::Z:
      swap_fields(p, &A::a1, &A::a3);
      swap_fields(p, &A::a12, &A::d23);
      swap_fields(p, &A::d12, &A::a23);
      swap_fields(p, &A::b12, &A::c23);
      swap_fields(p, &A::c12, &A::b23);
      swap_fields(p, &A::a13, &A::d13);
      swap_fields(p, &A::b13, &A::c13);
      swap_fields(p, &A::x1, &A::x4);
      swap_fields(p, &A::x2, &A::x3);
      break;
  }
  return p;
}

AccParams apply(const SymmetryWord& w, const AccParams& in) {
  AccParams p = in;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) p = apply(*it, p);
  return w.scale == Complex(1.0, 0.0) ? p : scaled(p, w.scale);
}

Matrix normalize_scale(const Matrix& m, double tol) {
  const Matrix g = convert_ordering(m, Ordering::rlex, Ordering::grlex);
  const double thresh = tol * max_abs(g);
  for (const Complex& x : g.data()) {
    if (std::abs(x) > thresh) return (1.0 / x) * m;
  }
  return m;
}

std::vector<OrbitElement> orbit(const Matrix& m, double tol) {
  std::vector<OrbitElement> out;
  std::deque<SymmetryWord> queue{SymmetryWord{}};
  auto seen = [&](const Matrix& n) {
    for (const auto& e : out) {
      if (max_abs(e.matrix - n) <= tol * std::max(1.0, std::max(max_abs(e.matrix), max_abs(n))))
        return true;
    }
    return false;
  };
  while (!queue.empty()) {
    SymmetryWord w = queue.front();
    queue.pop_front();
    Matrix img = normalize_scale(apply(w, m), tol);
    if (seen(img)) continue;
    out.push_back({w, std::move(img)});
    for (Letter l : {Letter::T, Letter::L, Letter::Z}) {
      SymmetryWord next = w;
      next.letters.insert(next.letters.begin(), l);
      queue.push_back(std::move(next));
    }
  }
  return out;
}

std::set<std::string> xpattern_action(const SymmetryWord& w, const std::set<std::string>& pattern) {
  AccParams p;
  for (const auto& name : pattern) {
    if (name != "x1" && name != "x2" && name != "x3" && name != "x4")
      throw Error(ErrorCode::InvalidInput, "x-pattern entries are x1..x4");
    p[field_index(name)] = 1.0;
  }
  SymmetryWord bare = w;
  bare.scale = 1.0;
  const AccParams q = apply(bare, p);
  std::set<std::string> out;
  for (const char* name : {"x1", "x2", "x3", "x4"})
    if (q[field_index(name)] != Complex{}) out.insert(name);
  return out;
}

}  // namespace ybeacc
