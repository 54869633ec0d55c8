#pragma once

#include <string>

#include "padiclab/rational.hpp"

namespace padiclab {

/// A rational value or +infinity. +infinity absorbs addition and is the
/// maximum of the (total) order. Valuations stay exact so polygon slopes
/// like -p/(p-1) compare without rounding.
class Valuation {
public:
    Valuation() : inf_(false), v_(0) {}
    Valuation(const Rational& v) : inf_(false), v_(v) {}  // NOLINT: implicit by design
    Valuation(long v) : inf_(false), v_(v) {}             // NOLINT

    static Valuation infinity() {
        Valuation v;
        v.inf_ = true;
        return v;
    }

    bool is_infinite() const { return inf_; }

    const Rational& value() const {
        if (inf_) throw usage_error("Valuation: +infinity has no finite value");
        return v_;
    }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.inf_ || b.inf_) return infinity();
        return Valuation(a.v_ + b.v_);
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.v_ == b.v_;
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

    std::string to_string() const { return inf_ ? "inf" : v_.to_string(); }

private:
    bool inf_;
    Rational v_;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

}  // namespace padiclab
