#include "enritch/ext_rat.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "enritch/error.hpp"

namespace enritch {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ExtRat::ExtRat(long n) : value_(n) {
  if (n < 0) throw std::domain_error("ExtRat: negative value " + std::to_string(n));
}

ExtRat::ExtRat(long num, long den) {
  if (den == 0) throw std::domain_error("ExtRat: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
  if (sgn(value_) < 0) throw std::domain_error("ExtRat: negative value " + value_.get_str());
}

ExtRat::ExtRat(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
  if (sgn(value_) < 0) throw std::domain_error("ExtRat: negative value " + value_.get_str());
}

ExtRat ExtRat::infinity() {
  ExtRat x;
  x.infinite_ = true;
  return x;
}

const mpq_class& ExtRat::rational() const {
  if (infinite_) throw std::domain_error("ExtRat: infinity has no rational value");
  return value_;
}

ExtRat& ExtRat::operator+=(const ExtRat& other) {
  if (infinite_ || other.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

ExtRat ExtRat::monus(const ExtRat& p) const {
  if (p.infinite_) return ExtRat();
  if (infinite_) return infinity();
  if (cmp(value_, p.value_) <= 0) return ExtRat();
  ExtRat out;
  out.value_ = value_ - p.value_;
  return out;
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ == b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtRat::str() const {
  if (infinite_) return "inf";
  return value_.get_str();
}

ExtRat ExtRat::parse(std::string_view text) {
  if (text == "inf") return infinity();
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw SchemaError("not an extended non-negative rational: \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw SchemaError("zero denominator in \"" + std::string(text) + "\"");
  return ExtRat(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const ExtRat& x) { return os << x.str(); }

}  // namespace enritch
