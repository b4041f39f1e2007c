/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_ERROR_HH
#define STRONGDIM_GUARD_ERROR_HH 1

#include <stdexcept>
#include <string>
#include <string_view>

namespace strongdim
{
    enum class ErrorKind
    {
        invalid_argument,
        disconnected,
        trivial_graph,
        parse_error,
        cap_exceeded,
        budget_exhausted,
        unknown_claim
    };

    auto error_kind_name(ErrorKind kind) -> std::string_view;

    /// All library failures are reported through this type. The kind gives
    /// callers (notably the CLI) a stable machine-readable reason.
    class Error : public std::runtime_error
    {
        private:
            ErrorKind _kind;

        public:
            Error(ErrorKind kind, const std::string & message);

            auto kind() const -> ErrorKind { return _kind; }
    };
}

#endif
