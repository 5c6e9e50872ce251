#ifndef SIMPSON_GENERATE_HPP
#define SIMPSON_GENERATE_HPP

#include "simpson/classify.hpp"
#include "simpson/table.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace simpson {

struct UnlistedCase : std::invalid_argument {
    explicit UnlistedCase(CaseId c)
        : std::invalid_argument("no verbatim example table for case " + std::to_string(c) +
                                "; use representative()") {}
};

struct UnknownName : std::invalid_argument {
    explicit UnknownName(const std::string& name)
        : std::invalid_argument("unknown corpus entry: " + name) {}
};

/// Verbatim example tables for cases 1..9, 13 and 14. Throws UnlistedCase
/// for the cases that are obtained by a transform instead.
TablePair figure3_example(CaseId c);

/// A witness pair for each of the 27 cases: the listed example table where
/// one exists, the table-swap of cases 4..6 for cases 10..12, and the
/// row-swap of case 28-c for cases 15..27. case_of(representative(c)) == c.
TablePair representative(CaseId c);

// A documented table pair from the literature. Context is orthogonal
// metadata: the variable meanings are stored as strings and never drive
// any computation, so one entry's numbers can be paired with another's
// context.
struct CorpusContext {
    std::string title;
    std::string m;  // meaning of the stratifying variable M / not-M
    std::string x;  // meaning of the row variable X / not-X
    std::string y;  // meaning of the column variable Y / not-Y
    std::string note;
};

struct CorpusEntry {
    std::string id;
    TablePair pair;
    CaseId expected_case;
    std::vector<CorpusContext> contexts;
};

/// Known names: simpson1951, blyth1971, gardner1976, lindley_novick1981,
/// hand1994. Throws UnknownName otherwise.
CorpusEntry literature_example(const std::string& name);

const std::vector<CorpusEntry>& literature_corpus();

// Monotonic sequence whose classification toggles with period 4:
// positive SP (case 3), positive alignment (case 1), negative SP
// (case 25), negative alignment (case 27). Terms k >= 4 are 20x the term
// four earlier; entries grow without bound, which exact integers absorb.
std::vector<TablePair> toggling_sequence(std::size_t n);

struct MonotonicityReport {
    bool monotonic = true;
    std::optional<std::size_t> first_violation;  // index k with term k+1 not >= term k
};

/// Checks all eight cell-wise inequalities for each consecutive pair.
MonotonicityReport is_monotonic(std::span<const TablePair> seq);

// Exhaustive enumeration of pairs with integer entries in [1, max_entry],
// in lexicographic order (a1,b1,c1,d1,a2,b2,c2,d2). This is the
// brute-force oracle behind the property sweeps; the raw-count form skips
// rational construction for bulk scans.
struct PairCounts {
    std::array<std::int64_t, 8> v;  // a1,b1,c1,d1,a2,b2,c2,d2
};

std::uint64_t pair_count(int max_entry);
PairCounts counts_at(int max_entry, std::uint64_t index);
TablePair make_pair(const PairCounts& counts);

void for_each_counts(int max_entry, const std::function<void(const PairCounts&)>& fn);
void for_each_pair(int max_entry, const std::function<void(const TablePair&)>& fn);

/// Deterministic for a fixed seed, stable across platforms (splitmix64
/// with entries mapped to [1, max_entry] by modulus).
TablePair random_pair(std::uint64_t seed, int max_entry);

/// First pair in enumeration order satisfying the predicate, or nullopt.
std::optional<TablePair> search(const std::function<bool(const TablePair&)>& predicate,
                                int max_entry);

}  // namespace simpson

#endif
