#include "hsalg/liealg/presentation.hpp"

#include <algorithm>
#include <atomic>

#include <omp.h>

namespace hsalg {

namespace {

std::uint64_t next_algebra_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter++;
}

int sign_of(Parity a, Parity b) { return (parity_bit(a) & parity_bit(b)) ? -1 : 1; }

}  // namespace

std::string scalar_string(const GaussRational& c) { return c.to_string(); }
std::string scalar_string(const UPoly& c) { return c.to_string("t"); }

template <class S>
BasicLieAlgebra<S>::BasicLieAlgebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parities)
    : name_(std::move(name)), id_(next_algebra_id()), labels_(std::move(labels)), parities_(std::move(parities)) {
  if (labels_.size() != parities_.size()) throw Error("labels and parities differ in length");
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("duplicate basis label");
  table_.assign(labels_.size() * labels_.size(), zero());
}

template <class S>
int BasicLieAlgebra<S>::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error("unknown basis label '" + label + "' in " + name_);
  return static_cast<int>(it - labels_.begin());
}

template <class S>
typename BasicLieAlgebra<S>::Element BasicLieAlgebra<S>::zero() const {
  Element e;
  e.algebra = id_;
  return e;
}

template <class S>
typename BasicLieAlgebra<S>::Element BasicLieAlgebra<S>::basis(int k) const {
  if (k < 0 || k >= dim()) throw Error("basis index out of range");
  Element e = zero();
  e.terms.emplace(k, S(1));
  return e;
}

template <class S>
typename BasicLieAlgebra<S>::Element BasicLieAlgebra<S>::make(std::map<int, S> terms) const {
  Element e = zero();
  for (auto& [k, c] : terms) {
    if (k < 0 || k >= dim()) throw Error("basis index out of range");
    e.add(k, c);
  }
  return e;
}

template <class S>
std::size_t BasicLieAlgebra<S>::slot(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim() || j >= dim()) throw Error("basis index out of range");
  return static_cast<std::size_t>(i) * labels_.size() + static_cast<std::size_t>(j);
}

template <class S>
void BasicLieAlgebra<S>::set_bracket(int i, int j, const Element& value) {
  if (value.algebra != id_) throw Error("bracket value from another presentation");
  table_[slot(i, j)] = value;
  Element partner = value;
  partner *= S(-sign_of(parity(i), parity(j)));
  if (i == j && !(partner == value)) {
    if (parity(i) == Parity::Even && !value.is_zero()) throw Error("[x,x] must vanish for even x");
  }
  table_[slot(j, i)] = i == j ? value : partner;
}

template <class S>
void BasicLieAlgebra<S>::set_bracket_entry(int i, int j, const Element& value) {
  if (value.algebra != id_) throw Error("bracket value from another presentation");
  table_[slot(i, j)] = value;
}

template <class S>
const typename BasicLieAlgebra<S>::Element& BasicLieAlgebra<S>::structure(int i, int j) const {
  return table_[slot(i, j)];
}

template <class S>
typename BasicLieAlgebra<S>::Element BasicLieAlgebra<S>::bracket(const Element& x, const Element& y) const {
  if (x.algebra != id_ || y.algebra != id_) throw Error("bracket of elements from a different presentation");
  Element out = zero();
  for (const auto& [i, a] : x.terms) {
    for (const auto& [j, b] : y.terms) {
      const Element& s = table_[slot(i, j)];
      if (s.is_zero()) continue;
      S ab = a * b;
      for (const auto& [k, c] : s.terms) out.add(k, ab * c);
    }
  }
  return out;
}

template <class S>
std::vector<std::pair<int, int>> BasicLieAlgebra<S>::check_antisymmetry() const {
  std::vector<std::pair<int, int>> bad;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      Element expect = structure(j, i);
      expect *= S(-sign_of(parity(i), parity(j)));
      if (!(structure(i, j) == expect)) bad.emplace_back(i, j);
    }
  }
  return bad;
}

template <class S>
typename BasicLieAlgebra<S>::Element BasicLieAlgebra<S>::jacobiator(int i, int j, int k) const {
  Element x = basis(i), y = basis(j), z = basis(k);
  Element a = bracket(x, bracket(y, z));
  a *= S(sign_of(parity(i), parity(k)));
  Element b = bracket(y, bracket(z, x));
  b *= S(sign_of(parity(j), parity(i)));
  Element c = bracket(z, bracket(x, y));
  c *= S(sign_of(parity(k), parity(j)));
  return a + b + c;
}

template <class S>
std::vector<JacobiViolation> BasicLieAlgebra<S>::check_jacobi_serial() const {
  std::vector<JacobiViolation> bad;
  for (int i = 0; i < dim(); ++i)
    for (int j = i; j < dim(); ++j)
      for (int k = j; k < dim(); ++k)
        if (!jacobiator(i, j, k).is_zero()) bad.push_back({i, j, k});
  return bad;
}

template <class S>
std::vector<JacobiViolation> BasicLieAlgebra<S>::check_jacobi() const {
  std::vector<JacobiViolation> bad;
  int n = dim();
#pragma omp parallel
  {
    std::vector<JacobiViolation> local;
#pragma omp for schedule(dynamic) nowait
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = j; k < n; ++k)
          if (!jacobiator(i, j, k).is_zero()) local.push_back({i, j, k});
#pragma omp critical
    bad.insert(bad.end(), local.begin(), local.end());
  }
  std::sort(bad.begin(), bad.end());
  return bad;
}

template <class S>
std::string BasicLieAlgebra<S>::element_string(const Element& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : x.terms) {
    if (!out.empty()) out += " + ";
    std::string cs = scalar_string(c);
    out += (cs == "1" ? "" : "(" + cs + ")*") + label(k);
  }
  return out;
}

template <class S>
nlohmann::json BasicLieAlgebra<S>::to_json() const {
  nlohmann::json brackets = nlohmann::json::array();
  for (int i = 0; i < dim(); ++i) {
    for (int j = i; j < dim(); ++j) {
      const Element& s = structure(i, j);
      if (s.is_zero()) continue;
      nlohmann::json value = nlohmann::json::object();
      for (const auto& [k, c] : s.terms) value[label(k)] = scalar_string(c);
      brackets.push_back({{"x", label(i)}, {"y", label(j)}, {"value", value}});
    }
  }
  nlohmann::json parity = nlohmann::json::array();
  for (auto p : parities_) parity.push_back(p == Parity::Odd ? "odd" : "even");
  return {{"name", name_}, {"basis", labels_}, {"parity", parity}, {"brackets", brackets}};
}

template class BasicLieAlgebra<GaussRational>;
template class BasicLieAlgebra<UPoly>;

}  // namespace hsalg
