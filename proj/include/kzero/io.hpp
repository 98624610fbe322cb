// Line-oriented readers and writers for the ring / functor / group file
// formats.  `#` starts a comment, blank lines are ignored, and one file
// may carry several documents, each terminated by `end`.
#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kzero/group.hpp"
#include "kzero/ring.hpp"

namespace kzero {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RingDoc {
    RingPtr ring;
    std::map<int, std::string> grades;  // optional `grade` lines
};

struct FunctorDoc {
    std::string name;
    std::string source;
    std::string target;
    std::map<std::pair<int, int>, long long> entries;
};

struct ParsedFile {
    std::vector<RingDoc> rings;
    std::vector<FunctorDoc> functors;
    std::vector<FiniteGroup> groups;
};

namespace detail {

class TokenReader {
public:
    TokenReader(std::istream& in, std::string origin)
        : in_(in), origin_(std::move(origin)) {}

    // next whitespace-separated token, crossing line boundaries
    bool next(std::string& tok) {
        while (pos_ >= tokens_.size()) {
            std::string line;
            if (!std::getline(in_, line)) return false;
            ++lineno_;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            tokens_.clear();
            pos_ = 0;
            std::istringstream ls(line);
            std::string t;
            while (ls >> t) tokens_.push_back(t);
        }
        tok = tokens_[pos_++];
        return true;
    }

    std::string expect(const std::string& what) {
        std::string tok;
        if (!next(tok)) fail("unexpected end of file while reading " + what);
        return tok;
    }

    long long expect_int(const std::string& what) {
        std::string tok = expect(what);
        try {
            size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            fail("expected an integer for " + what + ", got '" + tok + "'");
        }
        return 0;  // unreachable
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(origin_ + ":" + std::to_string(lineno_) + ": " + msg);
    }

private:
    std::istream& in_;
    std::string origin_;
    int lineno_ = 0;
    std::vector<std::string> tokens_;
    size_t pos_ = 0;
};

inline RingDoc parse_ring_body(TokenReader& tr) {
    std::string name = tr.expect("ring name");
    int rank = -1;
    std::vector<std::string> labels;
    std::vector<int> dual;
    std::map<int, std::string> grades;
    std::map<std::array<int, 3>, long long> nz;

    for (;;) {
        std::string key = tr.expect("ring field");
        if (key == "end") break;
        if (key == "rank") {
            rank = static_cast<int>(tr.expect_int("rank"));
            if (rank < 1 || rank > kMaxRank) tr.fail("rank out of range [1,64]");
        } else if (key == "unit") {
            if (tr.expect_int("unit index") != 0)
                tr.fail("unit index must be 0");
        } else if (key == "labels") {
            if (rank < 0) tr.fail("labels before rank");
            for (int i = 0; i < rank; ++i) labels.push_back(tr.expect("label"));
        } else if (key == "dual") {
            if (rank < 0) tr.fail("dual before rank");
            for (int i = 0; i < rank; ++i)
                dual.push_back(static_cast<int>(tr.expect_int("dual entry")));
        } else if (key == "grade") {
            int i = static_cast<int>(tr.expect_int("graded index"));
            if (rank < 0 || i < 0 || i >= rank) tr.fail("grade index out of range");
            if (!grades.emplace(i, tr.expect("grade label")).second)
                tr.fail("duplicate grade line for index " + std::to_string(i));
        } else if (key == "nz") {
            int i = static_cast<int>(tr.expect_int("nz i"));
            int j = static_cast<int>(tr.expect_int("nz j"));
            int k = static_cast<int>(tr.expect_int("nz k"));
            long long v = tr.expect_int("nz value");
            if (rank < 0 || i < 0 || j < 0 || k < 0 || i >= rank || j >= rank || k >= rank)
                tr.fail("nz index out of range");
            if (v < 0) tr.fail("structure constants must be nonnegative");
            if (!nz.emplace(std::array<int, 3>{i, j, k}, v).second)
                tr.fail("duplicate nz triple (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
        } else {
            tr.fail("unknown ring field '" + key + "'");
        }
    }
    if (rank < 0) tr.fail("ring '" + name + "' is missing its rank");
    if (labels.empty())
        for (int i = 0; i < rank; ++i) labels.push_back("x" + std::to_string(i));
    if (dual.empty()) tr.fail("ring '" + name + "' is missing its dual permutation");
    if (!grades.empty() && static_cast<int>(grades.size()) != rank)
        tr.fail("grade lines must cover every basis index");
    try {
        RingDoc doc;
        doc.ring = std::make_shared<FusionRing>(name, rank, std::move(dual),
                                                std::move(labels), std::move(nz));
        doc.grades = std::move(grades);
        return doc;
    } catch (const RingError& e) {
        tr.fail(e.what());
    }
}

inline FunctorDoc parse_functor_body(TokenReader& tr) {
    FunctorDoc doc;
    doc.name = tr.expect("functor name");
    for (;;) {
        std::string key = tr.expect("functor field");
        if (key == "end") break;
        if (key == "source") {
            doc.source = tr.expect("source ring name");
        } else if (key == "target") {
            doc.target = tr.expect("target ring name");
        } else if (key == "m") {
            int i = static_cast<int>(tr.expect_int("m i"));
            int j = static_cast<int>(tr.expect_int("m j"));
            long long v = tr.expect_int("m value");
            if (i < 0 || j < 0) tr.fail("multiplicity index out of range");
            if (v < 0) tr.fail("multiplicities must be nonnegative");
            if (!doc.entries.emplace(std::pair{i, j}, v).second)
                tr.fail("duplicate m entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
        } else {
            tr.fail("unknown functor field '" + key + "'");
        }
    }
    if (doc.source.empty() || doc.target.empty())
        tr.fail("functor '" + doc.name + "' needs source and target");
    return doc;
}

inline FiniteGroup parse_group_body(TokenReader& tr) {
    FiniteGroup g;
    g.name = tr.expect("group name");
    for (;;) {
        std::string key = tr.expect("group field");
        if (key == "end") break;
        if (key == "order") {
            long long n = tr.expect_int("order");
            if (n < 1 || n > kMaxRank) tr.fail("group order out of range [1,64]");
            g.order = static_cast<int>(n);
        } else if (key == "mul") {
            if (g.order < 1) tr.fail("mul before order");
            for (int t = 0; t < g.order * g.order; ++t) {
                long long v = tr.expect_int("mul entry");
                if (v < 0 || v >= g.order) tr.fail("mul entry out of range");
                g.table.push_back(static_cast<int>(v));
            }
        } else {
            tr.fail("unknown group field '" + key + "'");
        }
    }
    if (static_cast<int>(g.table.size()) != g.order * g.order)
        tr.fail("group '" + g.name + "' is missing its table");
    return g;
}

}  // namespace detail

inline ParsedFile parse_stream(std::istream& in, const std::string& origin) {
    detail::TokenReader tr(in, origin);
    ParsedFile out;
    std::string kind;
    while (tr.next(kind)) {
        if (kind == "ring")
            out.rings.push_back(detail::parse_ring_body(tr));
        else if (kind == "functor")
            out.functors.push_back(detail::parse_functor_body(tr));
        else if (kind == "group")
            out.groups.push_back(detail::parse_group_body(tr));
        else
            tr.fail("expected 'ring', 'functor' or 'group', got '" + kind + "'");
    }
    return out;
}

inline ParsedFile load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return parse_stream(in, path);
}

inline RingFunctor resolve_functor(const FunctorDoc& doc,
                                   const std::map<std::string, RingDoc>& rings) {
    auto src = rings.find(doc.source);
    auto tgt = rings.find(doc.target);
    if (src == rings.end())
        throw ParseError("functor '" + doc.name + "': unknown source ring '" +
                         doc.source + "'");
    if (tgt == rings.end())
        throw ParseError("functor '" + doc.name + "': unknown target ring '" +
                         doc.target + "'");
    RingFunctor f;
    f.name = doc.name;
    f.source = src->second.ring;
    f.target = tgt->second.ring;
    f.m.assign(f.source->rank(), std::vector<long long>(f.target->rank(), 0));
    for (const auto& [ij, v] : doc.entries) {
        auto [i, j] = ij;
        if (i >= f.source->rank() || j >= f.target->rank())
            throw ParseError("functor '" + doc.name + "': multiplicity index out of range");
        f.m[i][j] = v;
    }
    return f;
}

inline void write_ring(std::ostream& os, const FusionRing& r,
                       const std::map<int, std::string>& grades = {}) {
    os << "ring " << r.name() << "\n";
    os << "rank " << r.rank() << "\n";
    os << "labels";
    for (int i = 0; i < r.rank(); ++i) os << " " << r.label(i);
    os << "\ndual";
    for (int i = 0; i < r.rank(); ++i) os << " " << r.dual(i);
    os << "\n";
    for (const auto& [i, lab] : grades) os << "grade " << i << " " << lab << "\n";
    for (const auto& [key, v] : r.nonzeros()) {
        if (v == 0) continue;
        auto [i, j, k] = key;
        os << "nz " << i << " " << j << " " << k << " " << v << "\n";
    }
    os << "end\n";
}

inline void write_functor(std::ostream& os, const RingFunctor& f) {
    os << "functor " << f.name << "\n";
    os << "source " << f.source->name() << "\n";
    os << "target " << f.target->name() << "\n";
    for (int i = 0; i < f.src_rank(); ++i)
        for (int j = 0; j < f.tgt_rank(); ++j)
            if (f.m[i][j]) os << "m " << i << " " << j << " " << f.m[i][j] << "\n";
    os << "end\n";
}

inline void write_group(std::ostream& os, const FiniteGroup& g) {
    os << "group " << g.name << "\n";
    os << "order " << g.order << "\n";
    os << "mul\n";
    for (int a = 0; a < g.order; ++a) {
        for (int b = 0; b < g.order; ++b) os << (b ? " " : "") << g.mul(a, b);
        os << "\n";
    }
    os << "end\n";
}

}  // namespace kzero
