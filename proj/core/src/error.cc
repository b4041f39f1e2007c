/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/error.hh>

using namespace strongdim;

auto strongdim::error_kind_name(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::disconnected:     return "disconnected";
        case ErrorKind::trivial_graph:    return "trivial-graph";
        case ErrorKind::parse_error:      return "parse-error";
        case ErrorKind::cap_exceeded:     return "cap-exceeded";
        case ErrorKind::budget_exhausted: return "budget-exhausted";
        case ErrorKind::unknown_claim:    return "unknown-claim";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string & message) :
    std::runtime_error(message),
    _kind(kind)
{
}
