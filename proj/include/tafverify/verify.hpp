#ifndef TAFVERIFY_VERIFY_HPP
#define TAFVERIFY_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tafverify {

using json = nlohmann::ordered_json;

enum class check_status { pass, fail, flagged };
std::string to_string(check_status s);

struct check_result {
    std::string id;
    std::string paper_ref;
    check_status status = check_status::fail;
    std::string detail;
};

/* smallest prime p > 3 split in Q(sqrt(-n)); 5, 11, 7 for n = 1, 2, 3 */
long default_prime(long n);

/* all checks keyed to n (level-specific ones live under n = 1, 2, 3) */
std::vector<check_result> checks_for_n(long n);

/* every squarefree n <= max_n, sorted by id */
std::vector<check_result> verify_all(long max_n);

/* 0 when nothing failed, 1 otherwise */
int exit_status(std::vector<check_result> const & results);

json report_json(std::vector<check_result> const & results);

struct cover_descriptor {
    enum class kind { galois_cover, components };
    kind type = kind::components;
    long value = 1;
    std::string to_string() const;
    bool operator==(cover_descriptor const & o) const { return type == o.type && value == o.value; }
};

struct theorem_report {
    long n = 1;
    long p = 0;
    cover_descriptor k0, k1;
    long class_number = 1;
    std::string ring;
    /* the level-1 subring for the K0 stack, when one is stated */
    std::string k0_ring;
};

/* throws std::invalid_argument naming the violated hypothesis */
theorem_report report(long n, std::optional<long> p = std::nullopt);
json to_json(theorem_report const & r);

/* payloads for the CLI subcommands */
json classgroup_json(long n);
json lattice_json(long n);
json cm_json(long n);
json honda_tate_json(long n, long p, std::optional<std::vector<long>> aux);
json invariants_json(long level, std::optional<long> p, long max_weight, long max_denom);
json qseries_json(long precision);

} // namespace tafverify

#endif
