#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumsets/search.hpp"

namespace sumsets {

struct OracleConflict : Error {
    using Error::Error;
};

struct KnownResult {
    std::string citation;
    std::optional<long long> value;  // empty = does not exist
    std::string applicability;
    bool desk_checkable = true;
};

struct Theorem {
    std::string id;
    std::string statement;
    bool desk_checkable = true;
    std::string annotation;
    std::function<std::optional<KnownResult>(const QuantityQuery&)> apply;
    std::function<std::vector<QuantityQuery>(int max_n)> grid;  // empty for asserted entries
};

const std::vector<Theorem>& theorem_registry();
const Theorem& find_theorem(const std::string& id);

// every applicable entry; throws OracleConflict when two disagree
std::vector<KnownResult> known_values(const QuantityQuery& q);
std::optional<KnownResult> known_value(const QuantityQuery& q);

int order2_count(const Group& g);  // |Ord(G,2)|
bool is_elementary_2(const Group& g);

enum class PointStatus { Confirmed, Refuted, Skipped };
std::string status_str(PointStatus s);

struct GridPoint {
    std::map<std::string, long long> params;
    std::string group;
    std::optional<long long> predicted;
    std::optional<long long> computed;
    PointStatus status = PointStatus::Skipped;
    std::optional<Subset> witness;
    bool forced = false;  // confirmation implied by a known coincidence
    std::string note;
};

struct Report {
    std::string id;
    std::vector<GridPoint> points;
    int count(PointStatus s) const;
};

// soundness sweep: registry value against brute force over the theorem's grid
Report verify_theorem(const std::string& id, int max_n, const SearchOptions& opt = {});

struct Grid {
    std::vector<int> n, h, m, s, k;
    bool restricted = false;
};
std::vector<int> parse_range(const std::string& text);  // "1..30", "3", "2,4,6"

struct Conjecture {
    std::string id;
    std::string statement;
};
const std::vector<Conjecture>& conjecture_registry();
Report conjecture_check(const std::string& id, const Grid& grid, const SearchOptions& opt = {});

// closed-form predictions used by the conjecture sweeps
long long rhohat_h2_prediction(long long n, long long m);
long long rhohat_h3_prediction(long long n, long long m);
long long sigma_upper_prediction(long long n, long long m);
int dissociation_dimension_min(int n, int m);  // dim(Z_n, m) by brute force
std::vector<std::vector<int>> dissociated_family(int k);  // the recursive family in Z_{2^k}

}  // namespace sumsets
