#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "dgdual/error.hpp"

namespace dgdual {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact rational scalar, characteristic zero.
class Rat {
public:
    Rat() = default;
    Rat(long long n) : v_(n) {}
    Rat(long long num, long long den) : v_(BigInt(num), BigInt(den)) {
        require(den != 0, ErrorCode::ValidationError, "zero denominator");
    }
    explicit Rat(BigRational v) : v_(std::move(v)) {}
    explicit Rat(const BigInt& n) : v_(n) {}

    static long long characteristic() { return 0; }
    static Rat from_fraction(long long num, long long den) { return Rat(num, den); }

    bool is_zero() const { return v_.is_zero(); }
    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        require(!o.is_zero(), ErrorCode::ValidationError, "division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    Rat inverse() const {
        require(!is_zero(), ErrorCode::ValidationError, "inverse of zero");
        return Rat(BigRational(denominator(), numerator()));
    }

    // Canonical form "n" or "p/q" with q > 0.
    std::string str() const {
        if (denominator() == 1) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

private:
    BigRational v_{0};
};

// Prime field scalar. The modulus is a per-run global, set once before any
// arithmetic; values are stored reduced to [0, p).
class Fp {
public:
    Fp() = default;
    Fp(long long n) : v_(reduce(n)) {}

    static void set_modulus(long long p) {
        require(p >= 2 && is_prime(p), ErrorCode::ValidationError,
                "modulus must be prime, got " + std::to_string(p));
        modulus_ = p;
    }
    static long long modulus() {
        require(modulus_ != 0, ErrorCode::Internal, "prime field modulus not set");
        return modulus_;
    }
    static long long characteristic() { return modulus(); }
    static Fp from_fraction(long long num, long long den) { return Fp(num) / Fp(den); }

    static bool is_prime(long long p) {
        if (p < 2) return false;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    bool is_zero() const { return v_ == 0; }
    long long value() const { return v_; }

    Fp operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
    Fp& operator+=(const Fp& o) { v_ = (v_ + o.v_) % modulus(); return *this; }
    Fp& operator-=(const Fp& o) { v_ = (v_ - o.v_ % modulus() + modulus()) % modulus(); return *this; }
    Fp& operator*=(const Fp& o) {
        v_ = static_cast<long long>(static_cast<__int128>(v_) * o.v_ % modulus());
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    Fp inverse() const {
        require(v_ != 0, ErrorCode::ValidationError, "inverse of zero");
        // extended Euclid
        long long a = v_, b = modulus(), x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            long long t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0);
    }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp raw(long long reduced) { Fp f; f.v_ = reduced; return f; }
    static long long reduce(long long n) {
        long long p = modulus();
        long long r = n % p;
        return r < 0 ? r + p : r;
    }
    static inline long long modulus_ = 0;
    long long v_ = 0;
};

// Runtime description of the coefficient field; templates are instantiated
// over Rat or Fp according to this.
struct FieldSpec {
    enum class Kind { Rationals, Prime } kind = Kind::Rationals;
    long long p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(long long p) {
        require(Fp::is_prime(p), ErrorCode::ValidationError,
                "not a prime: " + std::to_string(p));
        return {Kind::Prime, p};
    }
    // Accepts "q" (rationals) or "fp:P".
    static FieldSpec parse(const std::string& s) {
        if (s == "q" || s == "Q" || s == "rationals") return rationals();
        if (s.rfind("fp:", 0) == 0) {
            try {
                return prime(std::stoll(s.substr(3)));
            } catch (const std::invalid_argument&) {
            } catch (const std::out_of_range&) {
            }
        }
        fail(ErrorCode::ParseError, "bad field spec '" + s + "' (want q or fp:P)");
    }

    long long characteristic() const { return kind == Kind::Rationals ? 0 : p; }
    std::string str() const { return kind == Kind::Rationals ? "q" : "fp:" + std::to_string(p); }

    // Rejects fields in which 1/n is unavailable for some n <= max_den.
    void require_denominators_up_to(long long max_den, const std::string& who) const {
        if (kind == Kind::Prime && p <= max_den)
            fail(ErrorCode::CharacteristicUnsupported,
                 who + " needs division by integers up to " + std::to_string(max_den) +
                     " but the field has characteristic " + std::to_string(p));
    }
    void require_char_zero(const std::string& who) const {
        if (kind != Kind::Rationals)
            fail(ErrorCode::CharacteristicUnsupported, who + " requires characteristic zero");
    }
};

// Parses an integer fraction "p/q" (or "n") into a scalar; exactness must
// survive serialization, so no decimal forms are accepted.
template <class K>
K parse_scalar(const std::string& s) {
    auto parse_int = [](const std::string& t) -> long long {
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &pos);
        } catch (...) {
            fail(ErrorCode::ParseError, "bad integer '" + t + "'");
        }
        require(pos == t.size(), ErrorCode::ParseError, "bad integer '" + t + "'");
        return v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return K(parse_int(s));
    long long num = parse_int(s.substr(0, slash));
    long long den = parse_int(s.substr(slash + 1));
    require(den != 0, ErrorCode::ParseError, "zero denominator in '" + s + "'");
    return K::from_fraction(num, den);
}

} // namespace dgdual
