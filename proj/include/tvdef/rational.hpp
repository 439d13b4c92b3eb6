#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tvdef {

/// Errors raised by domain operations (bad input to a well-formed request).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Errors raised while reading user input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using Int = mpz_class;
/// Exact rational, always canonical (lowest terms, positive denominator).
using Rat = mpq_class;
/// Vector in N_Q or M_Q.
using LVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den = 1)
{
    if (den == 0) throw DomainError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat parse_rat(std::string_view text)
{
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) throw ParseError("malformed rational '" + s + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("malformed rational '" + s + "'");
    };
    try {
        if (slash == std::string::npos) {
            check_int(s);
            return Rat(Int(s[0] == '+' ? s.substr(1) : s));
        }
        auto a = s.substr(0, slash), b = s.substr(slash + 1);
        check_int(a);
        check_int(b);
        Int den(b[0] == '+' ? b.substr(1) : b);
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return make_rat(Int(a[0] == '+' ? a.substr(1) : a), den);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + s + "'");
    }
}

inline std::string to_string(const Rat& r)
{
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_lattice_point(const LVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return is_integer(r); });
}

inline Rat dot(const LVec& a, const LVec& b)
{
    if (a.size() != b.size()) throw DomainError("rank mismatch in pairing");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline LVec operator+(const LVec& a, const LVec& b)
{
    if (a.size() != b.size()) throw DomainError("rank mismatch");
    LVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline LVec operator-(const LVec& a, const LVec& b)
{
    if (a.size() != b.size()) throw DomainError("rank mismatch");
    LVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline LVec operator-(const LVec& a)
{
    LVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline LVec operator*(const Rat& c, const LVec& a)
{
    LVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const LVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r == 0; });
}

inline LVec zero_vec(std::size_t n) { return LVec(n, Rat(0)); }

inline LVec unit_vec(std::size_t n, std::size_t i)
{
    LVec v = zero_vec(n);
    v[i] = 1;
    return v;
}

inline LVec int_vec(std::initializer_list<long> xs)
{
    LVec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

/// Positive multiple of v with coprime integer entries; zero stays zero.
inline LVec primitive(const LVec& v)
{
    if (is_zero(v)) return v;
    Int l = 1;
    for (const auto& x : v) l = lcm(l, Int(x.get_den()));
    std::vector<Int> ints(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = Int(v[i] * l);
        g = gcd(g, ints[i]);
    }
    LVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(ints[i] / g);
    return r;
}

/// Lexicographic order on vectors; used for every canonical sort.
inline bool lex_less(const LVec& a, const LVec& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_unique(std::vector<LVec>& vs)
{
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

inline std::string to_string(const LVec& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
    os << ')';
    return os.str();
}

} // namespace tvdef
