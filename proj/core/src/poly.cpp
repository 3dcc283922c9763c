#include "idio/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace idio {

namespace {

constexpr unsigned kFieldBits = 21;
constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;

bool key_divides(std::uint64_t den, std::uint64_t num) {
  auto d = MPoly::unpack(den);
  auto n = MPoly::unpack(num);
  return d.x <= n.x && d.y <= n.y && d.z <= n.z;
}

std::uint64_t key_add(std::uint64_t a, std::uint64_t b) {
  auto ea = MPoly::unpack(a);
  auto eb = MPoly::unpack(b);
  return MPoly::pack({ea.x + eb.x, ea.y + eb.y, ea.z + eb.z});
}

}  // namespace

std::uint64_t MPoly::pack(Exponents e) {
  if (e.x > kFieldMask || e.y > kFieldMask || e.z > kFieldMask)
    throw std::overflow_error("MPoly: exponent exceeds 2^21 - 1");
  return (std::uint64_t{e.x} << (2 * kFieldBits)) | (std::uint64_t{e.y} << kFieldBits) |
         std::uint64_t{e.z};
}

Exponents MPoly::unpack(std::uint64_t key) {
  return {static_cast<unsigned>((key >> (2 * kFieldBits)) & kFieldMask),
          static_cast<unsigned>((key >> kFieldBits) & kFieldMask),
          static_cast<unsigned>(key & kFieldMask)};
}

MPoly::MPoly(long c) {
  if (c != 0) terms_.push_back({0, Integer(c)});
}

MPoly::MPoly(const Integer& c) {
  if (c != 0) terms_.push_back({0, c});
}

MPoly MPoly::monomial(const Integer& c, Exponents e) {
  MPoly p;
  if (c != 0) p.terms_.push_back({pack(e), c});
  return p;
}

MPoly MPoly::from_sorted(std::vector<Term> terms) {
  MPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Integer MPoly::coeff(Exponents e) const {
  const auto key = pack(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.key > k; });
  if (it != terms_.end() && it->key == key) return it->coeff;
  return 0;
}

unsigned MPoly::degree_x() const {
  // Lexicographic order puts the highest power of X first.
  return terms_.empty() ? 0 : unpack(terms_.front().key).x;
}

bool MPoly::depends_on_x() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return unpack(t.key).x != 0; });
}

bool MPoly::depends_on_yz() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) {
    auto e = unpack(t.key);
    return e.y != 0 || e.z != 0;
  });
}

Integer MPoly::eval(const Integer& x, const Integer& y, const Integer& z) const {
  Integer sum = 0;
  Integer term;
  Integer power;
  for (const auto& t : terms_) {
    auto e = unpack(t.key);
    term = t.coeff;
    mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), e.x);
    term *= power;
    mpz_pow_ui(power.get_mpz_t(), y.get_mpz_t(), e.y);
    term *= power;
    mpz_pow_ui(power.get_mpz_t(), z.get_mpz_t(), e.z);
    term *= power;
    sum += term;
  }
  return sum;
}

MPoly MPoly::substitute(const std::optional<Integer>& x, const std::optional<Integer>& y,
                        const std::optional<Integer>& z) const {
  MPoly out;
  Integer power;
  for (const auto& t : terms_) {
    auto e = unpack(t.key);
    Integer c = t.coeff;
    if (x) {
      mpz_pow_ui(power.get_mpz_t(), x->get_mpz_t(), e.x);
      c *= power;
      e.x = 0;
    }
    if (y) {
      mpz_pow_ui(power.get_mpz_t(), y->get_mpz_t(), e.y);
      c *= power;
      e.y = 0;
    }
    if (z) {
      mpz_pow_ui(power.get_mpz_t(), z->get_mpz_t(), e.z);
      c *= power;
      e.z = 0;
    }
    out += monomial(c, e);
  }
  return out;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = 1;
  MPoly base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) return *this = rhs;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    if (a->key > b->key) {
      out.push_back(std::move(*a++));
    } else if (a->key < b->key) {
      out.push_back(*b++);
    } else {
      a->coeff += b->coeff;
      if (a->coeff != 0) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != rhs.terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  if (this == &rhs) {
    terms_.clear();
    return *this;
  }
  return *this += -rhs;
}

MPoly operator-(MPoly a) {
  for (auto& t : a.terms_) mpz_neg(t.coeff.get_mpz_t(), t.coeff.get_mpz_t());
  return a;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && b.terms_[0].key == 0) {
    MPoly out = a;
    for (auto& t : out.terms_) t.coeff *= b.terms_[0].coeff;
    return out;
  }
  if (a.terms_.size() == 1 && a.terms_[0].key == 0) return b * a;

  struct Product {
    std::uint64_t key;
    std::uint32_t i;
    std::uint32_t j;
  };
  std::vector<Product> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (std::uint32_t i = 0; i < a.terms_.size(); ++i)
    for (std::uint32_t j = 0; j < b.terms_.size(); ++j)
      products.push_back({key_add(a.terms_[i].key, b.terms_[j].key), i, j});
  std::sort(products.begin(), products.end(),
            [](const Product& l, const Product& r) { return l.key > r.key; });

  std::vector<MPoly::Term> out;
  std::size_t k = 0;
  while (k < products.size()) {
    MPoly::Term t{products[k].key, 0};
    for (; k < products.size() && products[k].key == t.key; ++k) {
      mpz_addmul(t.coeff.get_mpz_t(), a.terms_[products[k].i].coeff.get_mpz_t(),
                 b.terms_[products[k].j].coeff.get_mpz_t());
    }
    if (t.coeff != 0) out.push_back(std::move(t));
  }
  return MPoly::from_sorted(std::move(out));
}

bool operator==(const MPoly& a, const MPoly& b) {
  return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                    [](const MPoly::Term& l, const MPoly::Term& r) {
                      return l.key == r.key && l.coeff == r.coeff;
                    });
}

MPoly exact_div(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  if (den.terms_.size() == 1 && den.terms_[0].key == 0) return exact_div(num, den.terms_[0].coeff);

  std::map<std::uint64_t, Integer, std::greater<>> rem;
  for (const auto& t : num.terms_) rem.emplace_hint(rem.end(), t.key, t.coeff);

  const auto& lead = den.terms_.front();
  std::vector<MPoly::Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!key_divides(lead.key, top->first) ||
        !mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t()))
      throw std::logic_error("exact_div: nonzero remainder");
    MPoly::Term q{top->first - lead.key, 0};
    mpz_divexact(q.coeff.get_mpz_t(), top->second.get_mpz_t(), lead.coeff.get_mpz_t());
    rem.erase(top);
    for (auto it = den.terms_.begin() + 1; it != den.terms_.end(); ++it) {
      auto [slot, inserted] = rem.try_emplace(key_add(q.key, it->key), 0);
      mpz_submul(slot->second.get_mpz_t(), q.coeff.get_mpz_t(), it->coeff.get_mpz_t());
      if (slot->second == 0) rem.erase(slot);
    }
    quotient.push_back(std::move(q));
  }
  return MPoly::from_sorted(std::move(quotient));
}

MPoly exact_div(const MPoly& num, const Integer& den) {
  if (den == 0) throw std::domain_error("exact_div: division by zero");
  MPoly out = num;
  for (auto& t : out.terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), den.get_mpz_t()))
      throw std::logic_error("exact_div: coefficient not divisible");
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), den.get_mpz_t());
  }
  return out;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    Integer magnitude = abs(t.coeff);
    auto e = unpack(t.key);
    std::string mono;
    auto append = [&mono](char var, unsigned exp) {
      if (exp == 0) return;
      if (!mono.empty()) mono += '*';
      mono += var;
      if (exp > 1) mono += '^' + std::to_string(exp);
    };
    append('X', e.x);
    append('y', e.y);
    append('z', e.z);

    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + '*' + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MPoly parse() {
    MPoly sum;
    skip_space();
    if (at_end()) fail("empty input");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    sum += signed_term(negative);
    while (true) {
      skip_space();
      if (at_end()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      sum += signed_term(op == '-');
    }
    return sum;
  }

 private:
  MPoly signed_term(bool negative) {
    MPoly t = term();
    return negative ? -t : t;
  }

  MPoly term() {
    MPoly product = factor();
    while (true) {
      skip_space();
      if (at_end() || peek() != '*') break;
      get();
      product *= factor();
    }
    return product;
  }

  MPoly factor() {
    skip_space();
    if (at_end()) fail("expected factor");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return MPoly(Integer(digits()));
    get();
    MPoly base;
    switch (c) {
      case 'X':
      case 'x':
        base = MPoly::X();
        break;
      case 'y':
        base = MPoly::y();
        break;
      case 'z':
        base = MPoly::z();
        break;
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
    skip_space();
    if (!at_end() && peek() == '^') {
      get();
      skip_space();
      base = base.pow(static_cast<unsigned>(std::stoul(digits())));
    }
    return base;
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail("expected digits");
    return d;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << "MPoly::parse: " << what << " at offset " << pos_ << " in \"" << text_ << '"';
    throw std::invalid_argument(msg.str());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

GaussPoly GaussPoly::i_power(unsigned n) {
  switch (n % 4) {
    case 0:
      return {1, {}};
    case 1:
      return {{}, 1};
    case 2:
      return {-1, {}};
    default:
      return {{}, -1};
  }
}

GaussPoly substitute_neg_i_x(const MPoly& p) {
  // c*X^k -> c*(-i)^k*X^k, and (-i)^k = i^(3k).
  GaussPoly out;
  for (const auto& t : p.terms()) {
    auto e = MPoly::unpack(t.key);
    MPoly mono = MPoly::monomial(t.coeff, e);
    switch ((3 * e.x) % 4) {
      case 0:
        out.re += mono;
        break;
      case 1:
        out.im += mono;
        break;
      case 2:
        out.re -= mono;
        break;
      default:
        out.im -= mono;
        break;
    }
  }
  return out;
}

bool gaussian_identity_check(const MPoly& p, const MPoly& q, unsigned n) {
  if (p.depends_on_yz() || q.depends_on_yz())
    throw std::invalid_argument("gaussian_identity_check: polynomials must be univariate in X");
  if (p.degree_x() > n || q.degree_x() > n)
    throw std::invalid_argument("gaussian_identity_check: degree exceeds n");
  GaussPoly lhs = GaussPoly::i_power(n) * substitute_neg_i_x(p);
  return lhs.im.is_zero() && lhs.re == q;
}

}  // namespace idio
