#include "antnorm.h"

#include <new>
#include <string>

#include "antnorm/reports.hpp"

struct an_result {
    int status = ANTNORM_STATUS_USAGE;
    std::string output;
    std::string message;
};

namespace {

const char* kVersion = "antnorm 1.0.0";

template <typename Fn> an_result* guarded(Fn&& fn) noexcept {
    try {
        antnorm::CommandResult r = fn();
        return new (std::nothrow) an_result{r.status, std::move(r.output), std::move(r.message)};
    } catch (const std::exception& e) {
        auto* out = new (std::nothrow) an_result;
        if (out)
            out->message = e.what();
        return out;
    } catch (...) {
        return new (std::nothrow) an_result;
    }
}

antnorm::OutputFormat format_of(const char* format) {
    return antnorm::parse_format(format == nullptr ? "text" : format);
}

std::string str_of(const char* s, const char* flag) {
    if (s == nullptr)
        throw std::invalid_argument(std::string(flag) + ": missing value");
    return s;
}

} // namespace

extern "C" {

int an_result_status(const an_result* r) {
    return r ? r->status : ANTNORM_STATUS_USAGE;
}

const char* an_result_output(const an_result* r) {
    return r ? r->output.c_str() : "";
}

const char* an_result_message(const an_result* r) {
    return r ? r->message.c_str() : "out of memory";
}

void an_result_free(an_result* r) {
    delete r;
}

const char* an_version(void) {
    return kVersion;
}

an_result* an_lemmas(const char* ell_spec, const char* n_spec, const char* format) {
    return guarded([&] {
        return antnorm::cmd_lemmas(str_of(ell_spec, "--ell"), str_of(n_spec, "--n"),
                                   format_of(format));
    });
}

an_result* an_all_or_nothing(const char* ell_spec, const char* n_spec, const char* case_spec,
                             int sampled, uint64_t samples, uint64_t seed, uint64_t budget,
                             const char* format) {
    return guarded([&] {
        return antnorm::cmd_all_or_nothing(
            str_of(ell_spec, "--ell"), str_of(n_spec, "--n"),
            case_spec == nullptr ? "both" : case_spec, sampled != 0, samples, seed,
            budget == 0 ? antnorm::kDefaultScanBudget : budget, format_of(format));
    });
}

an_result* an_predict(uint64_t ell, unsigned t, unsigned s, const char* n_spec,
                      const char* format) {
    return guarded([&] {
        return antnorm::cmd_predict(ell, t, s, str_of(n_spec, "--n"), format_of(format));
    });
}

an_result* an_compare(int table_id, const char* format) {
    return guarded([&] { return antnorm::cmd_compare(table_id, format_of(format)); });
}

an_result* an_simulate(uint64_t ell, unsigned t, unsigned s, unsigned n, uint64_t samples,
                       uint64_t seed, const char* format) {
    return guarded(
        [&] { return antnorm::cmd_simulate(ell, t, s, n, samples, seed, format_of(format)); });
}

an_result* an_tail(uint64_t ell, unsigned t, unsigned start_level, unsigned terms,
                   const char* format) {
    return guarded(
        [&] { return antnorm::cmd_tail(ell, t, start_level, terms, format_of(format)); });
}

an_result* an_chevalley(const char* h, unsigned e_exp, uint64_t ell, unsigned unit_index_exp,
                        const char* format) {
    return guarded([&] {
        return antnorm::cmd_chevalley(str_of(h, "--h"), e_exp, ell, unit_index_exp,
                                      format_of(format));
    });
}

an_result* an_iwasawa(const char* e_list, uint64_t ell, unsigned s, const char* format) {
    return guarded(
        [&] { return antnorm::cmd_iwasawa(str_of(e_list, "--e"), ell, s, format_of(format)); });
}

} // extern "C"
