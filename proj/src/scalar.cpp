#include "nambu/scalar.hpp"

#include <ostream>

#include "nambu/errors.hpp"

namespace nambu {

Scalar::Scalar(long num, long den) {
  require(den != 0, ErrorKind::Parse, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { fail(ErrorKind::Parse, "not a rational: \"" + s + "\""); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) fail(ErrorKind::Parse, "zero denominator in \"" + s + "\"");
  Scalar r;
  r.q_ = mpq_class(n, d);
  r.q_.canonicalize();
  return r;
}

std::string Scalar::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require(!o.is_zero(), ErrorKind::DimensionMismatch, "division by zero");
  q_ /= o.q_;
  return *this;
}

void Scalar::fma(Scalar& a, const Scalar& b, const Scalar& c) {
  mpq_class t = b.q_ * c.q_;
  a.q_ += t;
}

bool Scalar::is_square() const {
  if (sgn(q_) < 0) return false;
  return mpz_perfect_square_p(q_.get_num_mpz_t()) && mpz_perfect_square_p(q_.get_den_mpz_t());
}

Scalar Scalar::sqrt() const {
  require(is_square(), ErrorKind::NeedsFieldExtension, "no rational square root of " + str());
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q_.get_den_mpz_t());
  return Scalar(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NonGradedSubspace: return "NonGradedSubspace";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::EndomorphismCheckFailed: return "EndomorphismCheckFailed";
    case ErrorKind::NotACochain: return "NotACochain";
    case ErrorKind::CocycleNotClosed: return "CocycleNotClosed";
    case ErrorKind::CocycleNotEven: return "CocycleNotEven";
    case ErrorKind::CocycleNotSkew: return "CocycleNotSkew";
    case ErrorKind::NoCompatibleSection: return "NoCompatibleSection";
    case ErrorKind::SectionInvalid: return "SectionInvalid";
    case ErrorKind::CoadjointMissing: return "CoadjointMissing";
    case ErrorKind::ThetaNotClosed: return "ThetaNotClosed";
    case ErrorKind::ThetaNotCyclic: return "ThetaNotCyclic";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotMetric: return "NotMetric";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::NotHalfDimensional: return "NotHalfDimensional";
    case ErrorKind::NotIsotropic: return "NotIsotropic";
    case ErrorKind::ComplementNotFound: return "ComplementNotFound";
    case ErrorKind::NoStableIsotropicVector: return "NoStableIsotropicVector";
    case ErrorKind::NeedsFieldExtension: return "NeedsFieldExtension";
    case ErrorKind::NotARepresentation: return "NotARepresentation";
    case ErrorKind::PostCheckFailed: return "PostCheckFailed";
  }
  return "Error";
}

}  // namespace nambu
