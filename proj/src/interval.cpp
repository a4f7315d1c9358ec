#include "nubex/interval.hpp"

#include <stdexcept>

namespace nubex {

Interval Interval::make(Rational lo, bool lo_closed, Rational hi, bool hi_closed) {
    if (lo > hi || (lo == hi && !(lo_closed && hi_closed)))
        throw std::invalid_argument("interval endpoints describe an empty set: " + lo.str() + " .. " + hi.str());
    Interval iv;
    iv.empty_ = false;
    iv.lo_ = std::move(lo);
    iv.hi_ = std::move(hi);
    iv.lo_closed_ = lo_closed;
    iv.hi_closed_ = hi_closed;
    return iv;
}

const Rational& Interval::lo() const {
    if (empty_) throw std::logic_error("lo() on empty interval");
    return lo_;
}

const Rational& Interval::hi() const {
    if (empty_) throw std::logic_error("hi() on empty interval");
    return hi_;
}

bool Interval::lo_closed() const {
    if (empty_) throw std::logic_error("lo_closed() on empty interval");
    return lo_closed_;
}

bool Interval::hi_closed() const {
    if (empty_) throw std::logic_error("hi_closed() on empty interval");
    return hi_closed_;
}

bool Interval::contains(const Rational& x) const {
    if (empty_) return false;
    if (x < lo_ || (x == lo_ && !lo_closed_)) return false;
    if (x > hi_ || (x == hi_ && !hi_closed_)) return false;
    return true;
}

Rational Interval::width() const {
    if (empty_) return Rational(0);
    return hi_ - lo_;
}

Interval Interval::affine_image(const Rational& scale, const Rational& shift) const {
    if (scale.sign() <= 0) throw std::invalid_argument("affine_image requires positive scale");
    if (empty_) return empty();
    return make(scale * lo_ + shift, lo_closed_, scale * hi_ + shift, hi_closed_);
}

std::string Interval::str() const {
    if (empty_) return "Empty";
    std::string s;
    s += lo_closed_ ? '[' : '(';
    s += lo_.str();
    s += ", ";
    s += hi_.str();
    s += hi_closed_ ? ']' : ')';
    return s;
}

bool operator==(const Interval& a, const Interval& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_closed_ == b.lo_closed_ && a.hi_closed_ == b.hi_closed_;
}

Interval intersect(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();

    Rational lo;
    bool lo_closed;
    if (a.lo() > b.lo()) { lo = a.lo(); lo_closed = a.lo_closed(); }
    else if (b.lo() > a.lo()) { lo = b.lo(); lo_closed = b.lo_closed(); }
    else { lo = a.lo(); lo_closed = a.lo_closed() && b.lo_closed(); }

    Rational hi;
    bool hi_closed;
    if (a.hi() < b.hi()) { hi = a.hi(); hi_closed = a.hi_closed(); }
    else if (b.hi() < a.hi()) { hi = b.hi(); hi_closed = b.hi_closed(); }
    else { hi = a.hi(); hi_closed = a.hi_closed() && b.hi_closed(); }

    if (lo > hi || (lo == hi && !(lo_closed && hi_closed))) return Interval::empty();
    return Interval::make(std::move(lo), lo_closed, std::move(hi), hi_closed);
}

Interval union_connected(const Interval& a, const Interval& b) {
    // The union with an empty set is the other interval, trivially connected.
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;

    // Order by left endpoint; on a tie the closed one goes first so
    // `first` always covers the union's left edge.
    const Interval* first = &a;
    const Interval* second = &b;
    if (b.lo() < a.lo() || (b.lo() == a.lo() && b.lo_closed() && !a.lo_closed()))
        std::swap(first, second);

    const bool gap = second->lo() > first->hi() ||
                     (second->lo() == first->hi() && !first->hi_closed() && !second->lo_closed());
    if (gap)
        throw std::domain_error("union is disconnected: gap between " + first->str() + " and " + second->str());

    Rational lo = first->lo();
    bool lo_closed = first->lo_closed() || (second->lo() == lo && second->lo_closed());

    Rational hi;
    bool hi_closed;
    if (first->hi() > second->hi()) { hi = first->hi(); hi_closed = first->hi_closed(); }
    else if (second->hi() > first->hi()) { hi = second->hi(); hi_closed = second->hi_closed(); }
    else { hi = first->hi(); hi_closed = first->hi_closed() || second->hi_closed(); }

    return Interval::make(std::move(lo), lo_closed, std::move(hi), hi_closed);
}

}  // namespace nubex
