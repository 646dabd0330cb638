#pragma once

#include "lorentz/scalar.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lorentz {

enum class Status {
    Holds,           // decided exactly
    HoldsSampled,    // refutation attempted over samples, none found
    Fails,
    FailsHypothesis, // a one-directional criterion did not apply; says nothing about its conclusion
    Unknown,         // a float quantity fell inside the tolerance band, or refutation-only search found nothing
    NotApplicable,
};

std::string_view to_string(Status s);

struct Witness {
    std::vector<std::size_t> indices;
    std::vector<std::vector<double>> points;
    std::string detail;
};

struct Verdict {
    Status status = Status::Holds;
    /// Smallest normalized slack over all checked inequalities; +inf when none.
    double margin = std::numeric_limits<double>::infinity();
    std::optional<Witness> witness;
    std::string note;

    bool holds() const { return status == Status::Holds || status == Status::HoldsSampled; }
    bool fails() const { return status == Status::Fails || status == Status::FailsHypothesis; }
    bool unknown() const { return status == Status::Unknown; }
};

Verdict make_verdict(Status s, std::string note = {});
Verdict make_failure(std::vector<std::size_t> indices, std::string detail);

/// For sufficient criteria: Fails becomes FailsHypothesis.
Verdict as_criterion(Verdict v);

/// Accumulates a family of inequalities lhs >= rhs (lhs > rhs when
/// strict). The first definite violation wins; otherwise any Indeterminate
/// comparison makes the result Unknown. The binding inequality is kept as
/// the witness in every outcome.
template <class T>
class InequalityChain {
public:
    InequalityChain(const Tolerance& tol, bool strict) : tol_(tol), strict_(strict) {}

    void require(const T& lhs, const T& rhs, std::vector<std::size_t> where, std::string label = {})
    {
        record(compare(lhs, rhs, tol_), normalized_slack(lhs, rhs), std::move(where), std::move(label));
    }

    /// Adds a comparison whose sign was decided by the caller.
    void record(Sign s, double slack, std::vector<std::size_t> where, std::string label = {})
    {
        if (slack < margin_ || !binding_) {
            margin_ = slack;
            binding_ = Witness{where, {}, label};
        }
        if (s == Sign::Indeterminate) {
            unknown_ = true;
            if (!undecided_) undecided_ = Witness{where, {}, label};
            return;
        }
        const bool ok = s == Sign::Positive || (!strict_ && s == Sign::Zero);
        if (!ok && !failure_) failure_ = Witness{std::move(where), {}, std::move(label)};
    }

    /// Merges another chain's finished verdict into this one.
    void absorb(const Verdict& v)
    {
        if (v.margin < margin_) {
            margin_ = v.margin;
            binding_ = v.witness;
        }
        if (v.fails() && !failure_) failure_ = v.witness ? v.witness : Witness{};
        if (v.unknown()) {
            unknown_ = true;
            if (!undecided_) undecided_ = v.witness;
        }
    }

    /// Input data is tested exactly: x > 0 (x >= 0 when allow_zero).
    void require_positive(const T& x, std::size_t index, bool allow_zero = false, std::string label = "coefficient not positive")
    {
        const int s = exact_sign(x);
        if (s < 0 || (s == 0 && !allow_zero)) {
            if (!failure_) failure_ = Witness{{index}, {}, std::move(label)};
        }
    }

    bool failed() const { return failure_.has_value(); }

    Verdict finish() const
    {
        Verdict v;
        v.margin = margin_;
        if (failure_) {
            v.status = Status::Fails;
            v.witness = failure_;
        } else if (unknown_) {
            v.status = Status::Unknown;
            v.witness = undecided_;
        } else {
            v.status = Status::Holds;
            v.witness = binding_;
        }
        return v;
    }

private:
    Tolerance tol_;
    bool strict_;
    double margin_ = std::numeric_limits<double>::infinity();
    bool unknown_ = false;
    std::optional<Witness> binding_;
    std::optional<Witness> failure_;
    std::optional<Witness> undecided_;
};

} // namespace lorentz
