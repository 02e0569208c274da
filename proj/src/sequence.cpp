#include "charpoly/sequence.hpp"

#include <algorithm>
#include <utility>

#include "charpoly/error.hpp"

namespace charpoly {

ExpSequence::ExpSequence(std::vector<Rational> head, std::vector<GeometricTerm> terms)
    : head_(std::move(head)) {
  for (auto& t : terms) {
    if (!t.coef.is_zero()) terms_.push_back(std::move(t));
  }
}

ExpSequence ExpSequence::geometric(Rational coef, Rational ratio) {
  return ExpSequence({}, {GeometricTerm{std::move(coef), std::move(ratio)}});
}

ExpSequence ExpSequence::unit(std::size_t index, Rational value) {
  std::vector<Rational> head(index + 1);
  head[index] = std::move(value);
  return ExpSequence(std::move(head), {});
}

Rational ExpSequence::at(std::size_t j) const {
  Rational v = j < head_.size() ? head_[j] : Rational(0);
  for (const auto& t : terms_) v += t.coef * t.ratio.pow(static_cast<long>(j));
  return v;
}

ExpSequence ExpSequence::shifted(std::size_t s) const {
  std::vector<Rational> head;
  if (s < head_.size()) head.assign(head_.begin() + static_cast<std::ptrdiff_t>(s), head_.end());
  std::vector<GeometricTerm> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.coef * t.ratio.pow(static_cast<long>(s)), t.ratio});
  return ExpSequence(std::move(head), std::move(terms));
}

ExpSequence ExpSequence::zero_below(std::size_t n) const {
  std::vector<Rational> head(std::max(n, head_.size()));
  for (std::size_t j = n; j < head_.size(); ++j) head[j] = head_[j];
  // Cancel the geometric part below n.
  for (std::size_t j = 0; j < n; ++j) {
    Rational g(0);
    for (const auto& t : terms_) g += t.coef * t.ratio.pow(static_cast<long>(j));
    head[j] = -g;
  }
  return ExpSequence(std::move(head), terms_);
}

ExpSequence ExpSequence::operator*(const Rational& s) const {
  std::vector<Rational> head = head_;
  for (auto& h : head) h *= s;
  std::vector<GeometricTerm> terms;
  for (const auto& t : terms_) terms.push_back({t.coef * s, t.ratio});
  return ExpSequence(std::move(head), std::move(terms));
}

ExpSequence ExpSequence::operator+(const ExpSequence& rhs) const {
  std::vector<Rational> head(std::max(head_.size(), rhs.head_.size()));
  for (std::size_t j = 0; j < head_.size(); ++j) head[j] += head_[j];
  for (std::size_t j = 0; j < rhs.head_.size(); ++j) head[j] += rhs.head_[j];
  std::vector<GeometricTerm> terms = terms_;
  for (const auto& t : rhs.terms_) {
    auto same = std::find_if(terms.begin(), terms.end(),
                             [&](const GeometricTerm& u) { return u.ratio == t.ratio; });
    if (same != terms.end()) {
      same->coef += t.coef;
    } else {
      terms.push_back(t);
    }
  }
  return ExpSequence(std::move(head), std::move(terms));
}

Rational tail_inner_product(const ExpSequence& x, const ExpSequence& y, std::size_t from) {
  Rational sum(0);
  // Finite part: every index where either head is live.
  const std::size_t finite_end = std::max(x.head().size(), y.head().size());
  for (std::size_t j = from; j < finite_end; ++j) {
    const Rational hx = j < x.head().size() ? x.head()[j] : Rational(0);
    const Rational hy = j < y.head().size() ? y.head()[j] : Rational(0);
    if (hx.is_zero() && hy.is_zero()) continue;
    Rational gx(0), gy(0);
    for (const auto& t : x.terms()) gx += t.coef * t.ratio.pow(static_cast<long>(j));
    for (const auto& t : y.terms()) gy += t.coef * t.ratio.pow(static_cast<long>(j));
    sum += hx * hy + hx * gy + gx * hy;
  }
  // Geometric x geometric over j >= from.
  for (const auto& s : x.terms()) {
    for (const auto& t : y.terms()) {
      const Rational q = s.ratio * t.ratio;
      if (!inside_unit_disc(q)) {
        throw DomainError("divergent geometric tail: |" + s.ratio.str() + " * " + t.ratio.str() +
                          "| >= 1");
      }
      sum += s.coef * t.coef * q.pow(static_cast<long>(from)) / (Rational(1) - q);
    }
  }
  return sum;
}

}  // namespace charpoly
