#include "simpson/generate.hpp"

namespace simpson {

namespace {

TablePair pair_of(long a1, long b1, long c1, long d1, long a2, long b2, long c2, long d2) {
    return {from_counts(a1, b1, c1, d1), from_counts(a2, b2, c2, d2)};
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> corpus;

    corpus.push_back({
        "simpson1951",
        pair_of(4, 3, 8, 5, 2, 3, 12, 15),
        26,
        {
            {"Cards (Simpson 1951)", "dirty / clean cards", "court / plain cards",
             "red / black cards",
             "Whether the proportion of court cards is associated with colour; the apparent "
             "association in the individual tables disappears in the aggregate, which is the "
             "table that makes sense here."},
            {"Treatment (Simpson 1951)", "male / female patients", "untreated / treated patients",
             "alive / dead",
             "Positive association between treatment and survival in each sex separately, but "
             "none in the aggregate."},
        },
    });

    corpus.push_back({
        "blyth1971",
        pair_of(1000, 9000, 50, 950, 95, 5, 5000, 5000),
        3,
        {
            {"Treatment (Blyth 1971)", "local / outstation patients",
             "new treatment / standard treatment", "alive / dead",
             "Local patients are much less likely to recover and the new treatment was given "
             "mostly to local patients, so it shows a poor overall recovery rate."},
        },
    });

    corpus.push_back({
        "gardner1976",
        pair_of(5, 6, 3, 4, 6, 3, 9, 5),
        3,
        {
            {"Poker chips (Gardner 1976)", "two tables (pieces of furniture)",
             "black / grey hats", "blue / white chips",
             "Coloured poker chips placed in different coloured hats; no causal story is "
             "available for this data."},
        },
    });

    corpus.push_back({
        "lindley_novick1981",
        pair_of(18, 12, 7, 3, 2, 8, 9, 21),
        25,
        {
            {"Treatment (Lindley and Novick 1981)", "male / female patients",
             "treated / not treated", "recovered / not recovered",
             "Males were mostly assigned to the treatment group and females to the control "
             "group; the disaggregated tables give the better recommendation."},
            {"Agriculture (Lindley and Novick 1981)", "tall / short plants",
             "white / black variety", "high / low yield",
             "Here the aggregated table gives the better recommendation: plant the variety "
             "with the higher overall yield."},
        },
    });

    corpus.push_back({
        "hand1994",
        pair_of(255, 174, 156, 102, 88, 222, 82, 175),
        25,
        {
            {"Psychiatry (Hand 1994)", "patients aged <=65 / >65", "year 1970 / year 1975",
             "male / female",
             "Both tables answer meaningful questions: the aggregate answers whether the "
             "proportion of males increased, the strata answer the same question at fixed age."},
        },
    });

    return corpus;
}

}  // namespace

TablePair figure3_example(CaseId c) {
    switch (c) {
        case 1: return pair_of(3, 1, 1, 1, 3, 1, 1, 1);
        case 2: return pair_of(3, 1, 6, 3, 5, 7, 1, 4);
        case 3: return pair_of(5, 3, 10, 10, 1, 19, 1, 20);
        case 4: return pair_of(3, 1, 1, 1, 2, 2, 3, 3);
        case 5: return pair_of(2, 8, 1, 5, 4, 4, 3, 3);
        case 6: return pair_of(2, 1, 3, 2, 3, 3, 1, 1);
        case 7: return pair_of(10, 5, 3, 5, 1, 2, 1, 1);
        case 8: return pair_of(2, 1, 1, 3, 1, 5, 1, 1);
        case 9: return pair_of(3, 2, 1, 1, 1, 5, 3, 2);
        case 13: return pair_of(2, 2, 3, 3, 1, 2, 2, 4);
        case 14: return pair_of(2, 2, 3, 3, 2, 2, 2, 2);
        default: throw UnlistedCase(c);
    }
}

TablePair representative(CaseId c) {
    if (c < 1 || c > 27) throw std::out_of_range("case number must be in 1..27");
    if ((c >= 1 && c <= 9) || c == 13 || c == 14) return figure3_example(c);
    if (c >= 10 && c <= 12) {
        TablePair p = figure3_example(c - 6);  // cases 4..6 under table swap
        return {p.t2, p.t1};
    }
    TablePair p = representative(28 - c);
    return {swap_rows(p.t1), swap_rows(p.t2)};
}

CorpusEntry literature_example(const std::string& name) {
    for (const CorpusEntry& e : literature_corpus()) {
        if (e.id == name) return e;
    }
    throw UnknownName(name);
}

const std::vector<CorpusEntry>& literature_corpus() {
    static const std::vector<CorpusEntry> corpus = build_corpus();
    return corpus;
}

std::vector<TablePair> toggling_sequence(std::size_t n) {
    static const std::array<TablePair, 4> base = {
        pair_of(5, 3, 10, 10, 1, 19, 1, 20),
        pair_of(10, 6, 10, 10, 1, 19, 1, 20),
        pair_of(100, 60, 20, 10, 1, 19, 5, 20),
        pair_of(100, 60, 20, 10, 20, 90, 5, 20),
    };
    static const Rational delta = 20;

    std::vector<TablePair> seq;
    seq.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k < 4) {
            seq.push_back(base[k]);
        } else {
            const TablePair& prev = seq[k - 4];
            seq.push_back({scale(prev.t1, delta), scale(prev.t2, delta)});
        }
    }
    return seq;
}

MonotonicityReport is_monotonic(std::span<const TablePair> seq) {
    auto table_le = [](const Table2x2& lo, const Table2x2& hi) {
        return lo.a() <= hi.a() && lo.b() <= hi.b() && lo.c() <= hi.c() && lo.d() <= hi.d();
    };
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        if (!table_le(seq[k].t1, seq[k + 1].t1) || !table_le(seq[k].t2, seq[k + 1].t2)) {
            return {false, k};
        }
    }
    return {true, std::nullopt};
}

std::uint64_t pair_count(int max_entry) {
    std::uint64_t n = 1;
    for (int i = 0; i < 8; ++i) n *= static_cast<std::uint64_t>(max_entry);
    return n;
}

PairCounts counts_at(int max_entry, std::uint64_t index) {
    PairCounts counts;
    for (int i = 7; i >= 0; --i) {
        counts.v[i] = 1 + static_cast<std::int64_t>(index % max_entry);
        index /= max_entry;
    }
    return counts;
}

TablePair make_pair(const PairCounts& counts) {
    const auto& v = counts.v;
    return {from_counts(v[0], v[1], v[2], v[3]), from_counts(v[4], v[5], v[6], v[7])};
}

void for_each_counts(int max_entry, const std::function<void(const PairCounts&)>& fn) {
    if (max_entry < 1) throw std::invalid_argument("max_entry must be >= 1");
    PairCounts counts;
    counts.v.fill(1);
    while (true) {
        fn(counts);
        int i = 7;
        while (i >= 0 && counts.v[i] == max_entry) {
            counts.v[i] = 1;
            --i;
        }
        if (i < 0) return;
        ++counts.v[i];
    }
}

void for_each_pair(int max_entry, const std::function<void(const TablePair&)>& fn) {
    for_each_counts(max_entry, [&](const PairCounts& counts) { fn(make_pair(counts)); });
}

namespace {

// splitmix64 (Steele, Lea, Flood 2014); fixed here as the portable
// generator so seeded pairs are reproducible across platforms.
std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

TablePair random_pair(std::uint64_t seed, int max_entry) {
    if (max_entry < 1) throw std::invalid_argument("max_entry must be >= 1");
    std::uint64_t state = seed;
    PairCounts counts;
    for (auto& cell : counts.v) {
        cell = 1 + static_cast<std::int64_t>(splitmix64_next(state) %
                                             static_cast<std::uint64_t>(max_entry));
    }
    return make_pair(counts);
}

std::optional<TablePair> search(const std::function<bool(const TablePair&)>& predicate,
                                int max_entry) {
    if (max_entry < 1) throw std::invalid_argument("max_entry must be >= 1");
    // No early-exit plumbing in for_each_counts; keep the scan explicit.
    PairCounts counts;
    counts.v.fill(1);
    while (true) {
        TablePair p = make_pair(counts);
        if (predicate(p)) return p;
        int i = 7;
        while (i >= 0 && counts.v[i] == max_entry) {
            counts.v[i] = 1;
            --i;
        }
        if (i < 0) return std::nullopt;
        ++counts.v[i];
    }
}

}  // namespace simpson
