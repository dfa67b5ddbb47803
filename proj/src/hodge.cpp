#include "degenloci/hodge.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace degenloci {

HodgePoly HodgePoly::constant(const BigInt& c) { return monomial(0, 0, c); }

HodgePoly HodgePoly::monomial(int p, int q, const BigInt& c) {
  HodgePoly h;
  h.set(p, q, c);
  return h;
}

HodgePoly HodgePoly::from_hodge_numbers(const std::vector<std::vector<BigInt>>& hodge) {
  HodgePoly h;
  for (std::size_t p = 0; p < hodge.size(); ++p) {
    for (std::size_t q = 0; q < hodge[p].size(); ++q) {
      h.set(p, q, (p + q) % 2 ? BigInt(-hodge[p][q]) : hodge[p][q]);
    }
  }
  return h;
}

BigInt HodgePoly::coeff(int p, int q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void HodgePoly::set(int p, int q, const BigInt& c) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) {
    terms_.erase({p, q});
  } else {
    terms_[{p, q}] = c;
  }
}

int HodgePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

HodgePoly HodgePoly::operator+(const HodgePoly& o) const {
  HodgePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.set(e.first, e.second, r.coeff(e.first, e.second) + c);
  return r;
}

HodgePoly HodgePoly::operator-(const HodgePoly& o) const { return *this + o.scaled(-1); }

HodgePoly HodgePoly::operator*(const HodgePoly& o) const {
  std::map<std::pair<int, int>, BigInt> acc;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) acc[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
  }
  HodgePoly r;
  for (const auto& [e, c] : acc) r.set(e.first, e.second, c);
  return r;
}

HodgePoly HodgePoly::scaled(const BigInt& c) const {
  HodgePoly r;
  for (const auto& [e, x] : terms_) r.set(e.first, e.second, x * c);
  return r;
}

BigInt HodgePoly::euler() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool HodgePoly::symmetric() const {
  for (const auto& [e, c] : terms_) {
    if (coeff(e.second, e.first) != c) return false;
  }
  return true;
}

BigInt HodgePoly::hodge_number(int p, int q) const {
  BigInt c = coeff(p, q);
  return (p + q) % 2 ? BigInt(-c) : c;
}

std::pair<HodgePoly, HodgePoly> HodgePoly::split_signs() const {
  HodgePoly plus, minus;
  for (const auto& [e, c] : terms_) {
    if (c > 0) {
      plus.set(e.first, e.second, c);
    } else {
      minus.set(e.first, e.second, -c);
    }
  }
  return {plus, minus};
}

std::string HodgePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::vector<std::string> parts;
    if (mag != 1 || (e.first == 0 && e.second == 0)) parts.push_back(to_decimal(mag));
    if (e.first > 0) parts.push_back(e.first > 1 ? "u^" + std::to_string(e.first) : "u");
    if (e.second > 0) parts.push_back(e.second > 1 ? "v^" + std::to_string(e.second) : "v");
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  }
  return out;
}

std::string HodgePoly::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) rows.push_back({e.first, e.second, to_decimal(c)});
  nlohmann::ordered_json j;
  j["epoly"] = std::move(rows);
  return j.dump();
}

HodgePoly HodgePoly::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  HodgePoly h;
  for (const auto& row : j.at("epoly")) {
    if (row.size() != 3) throw std::invalid_argument("epoly rows are [p, q, coeff]");
    const BigInt c = row[2].is_string() ? parse_bigint(row[2].get<std::string>()) : BigInt(row[2].get<long long>());
    const int p = row[0].get<int>(), q = row[1].get<int>();
    h.set(p, q, h.coeff(p, q) + c);
  }
  return h;
}

std::string HodgePoly::diamond(int dim) const {
  std::size_t width = 1;
  for (int p = 0; p <= dim; ++p) {
    for (int q = 0; q <= dim; ++q) width = std::max(width, to_decimal(hodge_number(p, q)).size());
  }
  ++width;
  // Row p + q = k sits on a grid of 2 dim + 1 cells, entries two cells apart.
  std::ostringstream out;
  for (int k = 2 * dim; k >= 0; --k) {
    const int hi = std::min(k, dim), lo = std::max(0, k - dim);
    std::string line(static_cast<std::size_t>(dim - (hi - lo)) * width, ' ');
    for (int p = hi; p >= lo; --p) {
      const std::string item = to_decimal(hodge_number(p, k - p));
      line += std::string(width - item.size(), ' ') + item;
      if (p > lo) line += std::string(width, ' ');
    }
    out << line << "\n";
  }
  return out.str();
}

QSeries::QSeries(int order) : c_(order + 1) {
  if (order < 0) throw std::invalid_argument("negative series order");
}

QSeries QSeries::one(int order) {
  QSeries s(order);
  s.c_[0] = HodgePoly::constant(1);
  return s;
}

QSeries QSeries::operator*(const QSeries& o) const {
  const int ord = std::min(order(), o.order());
  QSeries r(ord);
  for (int i = 0; i <= ord; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= ord; ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  return r;
}

QSeries QSeries::substitute(int n, int a, int b) const {
  if (n < 1) throw std::invalid_argument("substitution needs n >= 1");
  QSeries r(order());
  for (int k = 0; k * n <= order(); ++k) r.c_[k * n] = c_[k] * HodgePoly::monomial(a * k, b * k);
  return r;
}

QSeries power_exp(const HodgePoly& f, int order) {
  QSeries out = QSeries::one(order);
  for (const auto& [e, p] : f.terms()) {
    const HodgePoly x = HodgePoly::monomial(e.first, e.second);
    QSeries factor(order);
    HodgePoly xk = HodgePoly::constant(1);
    for (int k = 0; k <= order; ++k) {
      // (1 - xq)^{-p}: binom(p + k - 1, k); (1 - xq)^{|p|}: (-1)^k binom(|p|, k).
      BigInt c;
      if (p > 0) {
        c = binomial(static_cast<long long>(p) + k - 1, k);
      } else {
        const BigInt mag = -p;
        c = binomial(static_cast<long long>(mag), k);
        if (k % 2) c = -c;
      }
      factor[k] = xk.scaled(c);
      xk = xk * x;
    }
    out = out * factor;
  }
  return out;
}

HodgePoly hilb2_epoly_surface(const HodgePoly& e) {
  QSeries base = power_exp(e);
  if (!(base[1] == e)) throw std::logic_error("q^1 coefficient differs from the input");
  QSeries total = QSeries::one();
  for (int n = 1; n <= total.order(); ++n) total = total * base.substitute(n, n - 1, n - 1);
  if (!(total[1] == e)) throw std::logic_error("q^1 coefficient differs from the input");
  return total[2];
}

HodgePoly hilb2_epoly_threefold(const HodgePoly& e) {
  const HodgePoly omega2 = HodgePoly::monomial(1, 1) + HodgePoly::monomial(2, 2);
  QSeries total = power_exp(e) * power_exp(omega2 * e).substitute(2, 0, 0);
  if (!(total[1] == e)) throw std::logic_error("q^1 coefficient differs from the input");
  return total[2];
}

BigInt hilb2_euler_closed_form(const BigInt& e, int d) {
  if (d < 1 || d > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
  return (e * e + e) / 2 + (d - 1) * e;
}

}  // namespace degenloci
