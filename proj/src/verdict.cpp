#include "lorentz/verdict.hpp"

#include <utility>

namespace lorentz {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Holds: return "holds";
    case Status::HoldsSampled: return "holds-sampled";
    case Status::Fails: return "fails";
    case Status::FailsHypothesis: return "fails-hypothesis";
    case Status::Unknown: return "unknown";
    case Status::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

Verdict make_verdict(Status s, std::string note)
{
    Verdict v;
    v.status = s;
    v.note = std::move(note);
    return v;
}

Verdict make_failure(std::vector<std::size_t> indices, std::string detail)
{
    Verdict v;
    v.status = Status::Fails;
    v.witness = Witness{std::move(indices), {}, std::move(detail)};
    return v;
}

Verdict as_criterion(Verdict v)
{
    if (v.status == Status::Fails) v.status = Status::FailsHypothesis;
    return v;
}

} // namespace lorentz
