#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace starlift {

// Sorted sparse term list: strictly increasing keys, no zero coefficients
// stored. Coeff needs +=, unary -, == and an is_zero() visible from this
// namespace; Key needs < and ==.
template <class Key, class Coeff>
class TermMap {
 public:
  using Term = std::pair<Key, Coeff>;

  TermMap() = default;

  static TermMap from_terms(std::vector<Term> v) {
    std::sort(v.begin(), v.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(v.size());
    for (auto& t : v) {
      if (!merged.empty() && merged.back().first == t.first)
        merged.back().second += t.second;
      else
        merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return is_zero(t.second); });
    TermMap out;
    out.terms_ = std::move(merged);
    return out;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Coeff* find(const Key& k) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), k,
        [](const Term& t, const Key& key) { return t.first < key; });
    if (it == terms_.end() || !(it->first == k)) return nullptr;
    return &it->second;
  }

  TermMap& operator+=(const TermMap& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
      if (a->first < b->first) {
        out.push_back(*a++);
      } else if (b->first < a->first) {
        out.push_back(*b++);
      } else {
        Coeff c = a->second;
        c += b->second;
        if (!is_zero(c)) out.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    out.insert(out.end(), a, terms_.end());
    out.insert(out.end(), b, o.terms_.end());
    terms_ = std::move(out);
    return *this;
  }

  friend TermMap operator+(TermMap a, const TermMap& b) {
    a += b;
    return a;
  }

  TermMap operator-() const {
    TermMap out;
    out.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.terms_.emplace_back(k, -c);
    return out;
  }

  friend TermMap operator-(const TermMap& a, const TermMap& b) { return a + (-b); }

  friend bool operator==(const TermMap&, const TermMap&) = default;

  // Applies f to every coefficient, dropping resulting zeros. Keys unchanged.
  template <class F>
  TermMap mapped_coeffs(F&& f) const {
    TermMap out;
    out.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) {
      Coeff nc = f(c);
      if (!is_zero(nc)) out.terms_.emplace_back(k, std::move(nc));
    }
    return out;
  }

  // Applies a strictly order-preserving key transform (e.g. an exponent
  // shift). Coefficients unchanged.
  template <class F>
  TermMap mapped_keys(F&& f) const {
    TermMap out;
    out.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.terms_.emplace_back(f(k), c);
    return out;
  }

 private:
  std::vector<Term> terms_;
};

// Order-insensitive accumulator for assembling TermMaps out of products.
template <class Key, class Coeff>
class TermAccumulator {
 public:
  void add(Key k, const Coeff& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = m_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) m_.erase(it);
    }
  }

  TermMap<Key, Coeff> take() {
    std::vector<typename TermMap<Key, Coeff>::Term> v;
    v.reserve(m_.size());
    for (auto& [k, c] : m_) v.emplace_back(k, std::move(c));
    m_.clear();
    return TermMap<Key, Coeff>::from_terms(std::move(v));
  }

 private:
  std::map<Key, Coeff> m_;
};

}  // namespace starlift
