#ifndef GCX_LINCOMB_HPP
#define GCX_LINCOMB_HPP

#include <map>
#include <utility>

#include "gcx/rational.hpp"

namespace gcx {

// Finite formal sum over a totally ordered basis type B. Zero coefficients
// are never stored, so == on the maps is equality of combinations.
template <class B>
class LinComb {
public:
    using map_type = std::map<B, Rational>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;

    static LinComb single(const B& b, const Rational& c = Rational(1))
    {
        LinComb x;
        x.add(b, c);
        return x;
    }

    void add(const B& b, const Rational& c)
    {
        if (c == 0)
            return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(b, c);
            return;
        }
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }

    void add(B&& b, const Rational& c)
    {
        if (c == 0)
            return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(std::move(b), c);
            return;
        }
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }

    // this += s * other
    void add_scaled(const LinComb& other, const Rational& s)
    {
        if (s == 0)
            return;
        for (const auto& [b, c] : other.terms_)
            add(b, Rational(c * s));
    }

    LinComb& operator+=(const LinComb& o) { add_scaled(o, Rational(1)); return *this; }
    LinComb& operator-=(const LinComb& o) { add_scaled(o, Rational(-1)); return *this; }

    LinComb& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_)
            kv.second *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    LinComb operator-() const { LinComb r = *this; r *= Rational(-1); return r; }

    Rational coeff(const B& b) const
    {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

// a + s*b
template <class B>
LinComb<B> lincomb_combine(const LinComb<B>& a, const LinComb<B>& b, const Rational& s)
{
    LinComb<B> r = a;
    r.add_scaled(b, s);
    return r;
}

// Apply a linear map given on basis elements.
template <class B, class F>
auto apply_linear(const LinComb<B>& x, F&& f) -> decltype(f(std::declval<const B&>()))
{
    decltype(f(std::declval<const B&>())) out;
    for (const auto& [b, c] : x)
        out.add_scaled(f(b), c);
    return out;
}

} // namespace gcx

#endif
