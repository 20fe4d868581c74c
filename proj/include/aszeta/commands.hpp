#pragma once

#include <functional>
#include <iosfwd>
#include <string>

namespace aszeta {

// Subcommand bodies, separated from flag parsing so the test suite can run
// them in-process.  Each writes a JSON report to `out`, diagnostics to
// `err`, and returns the process exit code:
//   0 success, 1 verification mismatch, 2 input error, 3 feasibility
//   refusal.  (4 is reserved for internal invariant failures, which are
//   bugs, not part of the interface.)

int cmd_analyze(const std::string& specfile, unsigned dim_ceiling, std::ostream& out,
                std::ostream& err);

int cmd_lfunction(const std::string& specfile, unsigned dim_ceiling, std::ostream& out,
                  std::ostream& err);

// One degree (--n) or a range 1..--n-max (or --n..--n-max when both given).
int cmd_count(const std::string& specfile, unsigned long n, unsigned long n_max,
              unsigned dim_ceiling, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    unsigned brute_bound = 24; // enumeration oracles run while m*n stays within
    unsigned dim_ceiling = 4096;
    bool inject_fault = false; // corrupt one multiplicity to prove mismatches surface
};

int cmd_verify(const std::string& specfile, const VerifyOptions& opt, std::ostream& out,
               std::ostream& err);

int cmd_suzuki(unsigned h, unsigned long n_max, bool cross_check, unsigned dim_ceiling,
               std::ostream& out, std::ostream& err);

int cmd_seed_corpus(unsigned long seed, unsigned count, const std::string& m_list,
                    unsigned d_max, std::ostream& out, std::ostream& err);

// Run a body under the exception-to-exit-code mapping above.
int run_mapped(const std::function<int()>& body, std::ostream& err);

} // namespace aszeta
