#include "mtasep/oscq.hpp"

#include "mtasep/error.hpp"

namespace mtasep {

std::string QOscMonomial::str() const {
  std::string s;
  auto join = [&](const std::string& part) {
    if (!s.empty()) s += ' ';
    s += part;
  };
  if (grade > 0) join("A+^" + std::to_string(grade));
  if (t > 0) join("K^" + std::to_string(t));
  if (grade < 0) join("A-^" + std::to_string(-grade));
  return s.empty() ? "1" : s;
}

QOscElem::QOscElem(const QOscMonomial& m, const QLaurent& c) {
  if (m.t < 0) throw InvalidInput("negative power of k");
  if (!c.is_zero()) terms_.emplace(m, c);
}

QOscElem QOscElem::generator(QGenerator g) {
  switch (g) {
    case QGenerator::Create: return QOscElem(QOscMonomial::creation());
    case QGenerator::Annihilate: return QOscElem(QOscMonomial::annihilation());
    case QGenerator::K: return QOscElem(QOscMonomial::k_power(1));
  }
  return {};
}

QLaurent QOscElem::coefficient(const QOscMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QLaurent() : it->second;
}

void QOscElem::add(const QOscMonomial& m, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QOscElem& QOscElem::operator+=(const QOscElem& y) {
  for (const auto& [m, c] : y.terms_) add(m, c);
  return *this;
}

QOscElem& QOscElem::operator-=(const QOscElem& y) {
  for (const auto& [m, c] : y.terms_) add(m, -c);
  return *this;
}

// Right multiplication rules, P(s,t) = (a+)^s k^t and M(s,t) = k^t (a-)^s:
//   P(s,t) k  = P(s,t+1)                 M(s,t) a- = M(s+1,t)
//   P(s,t) a+ = (-q)^t P(s+1,t)          M(s,t) k  = (-q)^s M(s,t+1)
//   P(0,t) a- = M(1,t)
//   P(s,t) a- = (-q)^{-t} (P(s-1,t) - P(s-1,t+2))          s >= 1
//   M(s,t) a+ = M(s-1,t) - q^{2s} M(s-1,t+2)                with M(0,t) = P(0,t)
QOscElem QOscElem::times(QGenerator g) const {
  QOscElem out;
  for (const auto& [m, c] : terms_) {
    const int s = m.grade >= 0 ? m.grade : -m.grade;
    if (m.grade >= 0) {
      switch (g) {
        case QGenerator::K: out.add({m.grade, m.t + 1}, c); break;
        case QGenerator::Create: out.add({s + 1, m.t}, c * minus_q_power(m.t)); break;
        case QGenerator::Annihilate:
          if (s == 0) {
            out.add({-1, m.t}, c);
          } else {
            QLaurent f = c * minus_q_power(-m.t);
            out.add({s - 1, m.t}, f);
            out.add({s - 1, m.t + 2}, -f);
          }
          break;
      }
    } else {
      switch (g) {
        case QGenerator::Annihilate: out.add({-(s + 1), m.t}, c); break;
        case QGenerator::K: out.add({m.grade, m.t + 1}, c * minus_q_power(s)); break;
        case QGenerator::Create:
          out.add({-(s - 1), m.t}, c);
          out.add({-(s - 1), m.t + 2}, -(c * QLaurent::monomial({2 * s})));
          break;
      }
    }
  }
  return out;
}

std::string QOscElem::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    s += "(" + c.str({"q"}) + ")*" + m.str();
    first = false;
  }
  return s;
}

QOscElem qosc_mul(const QOscElem& x, const QOscElem& y) {
  QOscElem out;
  for (const auto& [my, cy] : y.terms()) {
    QOscElem partial = x;
    const int s = my.grade >= 0 ? my.grade : -my.grade;
    if (my.grade >= 0) {
      for (int r = 0; r < s; ++r) partial = partial.times(QGenerator::Create);
      for (int r = 0; r < my.t; ++r) partial = partial.times(QGenerator::K);
    } else {
      for (int r = 0; r < my.t; ++r) partial = partial.times(QGenerator::K);
      for (int r = 0; r < s; ++r) partial = partial.times(QGenerator::Annihilate);
    }
    for (const auto& [m, c] : partial.terms()) out.add(m, c * cy);
  }
  return out;
}

OscElem specialize_q0(const QOscElem& x) {
  OscElem out;
  for (const auto& [m, c] : x.terms()) {
    if (c.min_exponent(0) < 0)
      throw ConsistencyError("q = 0 specialization of a coefficient with a negative power of q");
    BigInt c0 = c.coefficient({0});
    if (c0 == 0) continue;
    const int s = m.grade >= 0 ? m.grade : -m.grade;
    OscMonomial mono;
    if (m.grade >= 0)
      mono = m.t > 0 ? OscMonomial::mid(s, 0) : OscMonomial::creation(s);
    else
      mono = m.t > 0 ? OscMonomial::mid(0, s) : OscMonomial::annihilation(s);
    out.add(mono, c0);
  }
  return out;
}

QZRational& QZRational::operator+=(const QZRational& y) {
  for (const auto& [t, c] : y.poles) {
    auto& slot = poles[t];
    slot += c;
    if (slot.is_zero()) poles.erase(t);
  }
  polynomial += y.polynomial;
  return *this;
}

std::string QZRational::str() const {
  std::string s;
  for (const auto& [t, c] : poles) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str({"q"}) + ")/(1 - (-q)^" + std::to_string(t) + "*z)";
  }
  if (!polynomial.is_zero()) {
    if (!s.empty()) s += " + ";
    s += polynomial.str({"z", "q"});
  }
  return s.empty() ? "0" : s;
}

QZRational trace_zh(const QOscElem& x) {
  QZRational out;
  for (const auto& [m, c] : x.terms())
    if (m.grade == 0) {
      auto& slot = out.poles[m.t];
      slot += c;
      if (slot.is_zero()) out.poles.erase(m.t);
    }
  return out;
}

}  // namespace mtasep
