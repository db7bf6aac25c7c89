#ifndef MONO_VERIFY_HPP
#define MONO_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mono {

enum class LawStatus { passed, failed, budget_exhausted };

struct LawReport {
    std::string law;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_counterexample;
    LawStatus status = LawStatus::passed;
};

struct VerifyReport {
    std::string scope;
    std::vector<LawReport> laws;

    bool ok() const;
    bool exhausted() const;
};

// budget caps the number of cases per law; 0 means the law's own default.
// Laws whose default exceeds a nonzero budget run truncated and report
// budget_exhausted instead of passed.
VerifyReport verify_example();
VerifyReport verify_lemma23(std::uint64_t seed, std::size_t budget = 0);
VerifyReport verify_thm22(std::uint64_t seed, std::size_t budget = 0);
VerifyReport verify_special(std::uint64_t seed, std::size_t budget = 0);
VerifyReport verify_graphs(std::uint64_t seed, std::size_t budget = 0);
VerifyReport verify_squarefree(std::uint64_t seed, std::size_t budget = 0);

std::vector<VerifyReport> verify_all(std::uint64_t seed, std::size_t budget = 0);

std::string format_report(const VerifyReport& r);

} // namespace mono

#endif
