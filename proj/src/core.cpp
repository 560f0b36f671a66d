#include "coxbruhat/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_set>

namespace coxbruhat {

namespace {

constexpr double kSignTolerance = 1e-8;

bool is_separator(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
}

std::vector<std::string_view> split_tokens(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_separator(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_separator(text[j])) ++j;
        if (j > i) tokens.push_back(text.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool is_identity_token(std::string_view tok) {
    return tok == "e" || tok == "\xE2\x88\x85"; // U+2205 EMPTY SET
}

} // namespace

std::vector<Gen> GenSet::members() const {
    std::vector<Gen> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Gen g : e.word()) {
        h ^= static_cast<std::size_t>(g) + 1;
        h *= 1099511628211ULL;
    }
    return h;
}

CoxeterSystem::CoxeterSystem(std::vector<std::string> names, std::vector<std::vector<int>> matrix,
                             int length_cap)
    : rank_(static_cast<int>(names.size())), names_(std::move(names)), matrix_(std::move(matrix)),
      length_cap_(length_cap) {
    if (rank_ == 0) fail(ErrorKind::InvalidCoxeterMatrix, "rank must be positive");
    if (rank_ > 64) fail(ErrorKind::InvalidCoxeterMatrix, "rank above 64 is not supported");
    if (length_cap_ <= 0) fail(ErrorKind::InvalidCoxeterMatrix, "length cap must be positive");
    if (static_cast<int>(matrix_.size()) != rank_)
        fail(ErrorKind::InvalidCoxeterMatrix, "matrix has " + std::to_string(matrix_.size()) +
                                                  " rows but there are " + std::to_string(rank_) +
                                                  " generators");
    std::set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty()) fail(ErrorKind::InvalidCoxeterMatrix, "generator names must be nonempty");
        if (is_identity_token(n))
            fail(ErrorKind::InvalidCoxeterMatrix, "generator name '" + n + "' is reserved");
        if (std::any_of(n.begin(), n.end(), is_separator))
            fail(ErrorKind::InvalidCoxeterMatrix, "generator name '" + n + "' contains a separator");
        if (!seen.insert(n).second)
            fail(ErrorKind::InvalidCoxeterMatrix, "duplicate generator name '" + n + "'");
    }
    for (int i = 0; i < rank_; ++i) {
        if (static_cast<int>(matrix_[i].size()) != rank_)
            fail(ErrorKind::InvalidCoxeterMatrix, "matrix row " + std::to_string(i) + " has wrong size");
    }
    form_.assign(static_cast<std::size_t>(rank_) * rank_, 0.0);
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) {
            const int mij = matrix_[i][j];
            if (i == j) {
                if (mij != 1) fail(ErrorKind::InvalidCoxeterMatrix, "diagonal entries must be 1");
                form_[i * rank_ + j] = 2.0;
                continue;
            }
            if (mij != matrix_[j][i]) fail(ErrorKind::InvalidCoxeterMatrix, "matrix is not symmetric");
            if (mij != kInfinity && mij < 2)
                fail(ErrorKind::InvalidCoxeterMatrix,
                     "off-diagonal entries must be >= 2 or 0 (infinity)");
            form_[i * rank_ + j] =
                mij == kInfinity ? -2.0 : -2.0 * std::cos(std::numbers::pi / static_cast<double>(mij));
        }
    }
}

Gen CoxeterSystem::index_of(std::string_view name) const {
    for (int i = 0; i < rank_; ++i)
        if (names_[i] == name) return i;
    return -1;
}

Element CoxeterSystem::generator(Gen s) const {
    return Element{Word{s}};
}

void CoxeterSystem::reflect(Gen s, std::span<double> v) const {
    double pairing = 0.0;
    const double* row = &form_[s * rank_];
    for (int t = 0; t < rank_; ++t) pairing += row[t] * v[t];
    v[s] -= pairing;
}

std::vector<double> CoxeterSystem::inverse_action(std::span<const Gen> word) const {
    // w^{-1} = s_k ... s_1, accumulated by left multiplication in word order.
    const int n = rank_;
    std::vector<double> mat(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) mat[i * n + i] = 1.0;
    std::vector<double> col(n);
    for (Gen s : word) {
        const double* row = &form_[s * n];
        for (int j = 0; j < n; ++j) {
            double pairing = 0.0;
            for (int t = 0; t < n; ++t) pairing += row[t] * mat[t * n + j];
            mat[s * n + j] -= pairing;
        }
    }
    return mat;
}

std::vector<double> CoxeterSystem::action(std::span<const Gen> word) const {
    Word reversed(word.rbegin(), word.rend());
    return inverse_action(reversed);
}

bool CoxeterSystem::column_negative(const std::vector<double>& mat, Gen col) const {
    for (int i = 0; i < rank_; ++i)
        if (mat[i * rank_ + col] < -kSignTolerance) return true;
    return false;
}

Element CoxeterSystem::normalize(std::span<const Gen> word) const {
    for (Gen g : word)
        if (g < 0 || g >= rank_) fail(ErrorKind::InvalidWord, "generator index out of range");
    const int n = rank_;
    std::vector<double> mat = inverse_action(word);
    Word canonical;
    // Peel off the smallest left descent until none remain.
    for (;;) {
        Gen s = -1;
        for (Gen t = 0; t < n; ++t) {
            if (column_negative(mat, t)) {
                s = t;
                break;
            }
        }
        if (s < 0) break;
        canonical.push_back(s);
        if (canonical.size() > word.size())
            fail(ErrorKind::InternalAssertionFailed, "normalization did not terminate");
        if (static_cast<int>(canonical.size()) > length_cap_)
            fail(ErrorKind::LengthCapExceeded,
                 "element length exceeds the cap of " + std::to_string(length_cap_));
        // mat <- mat * sigma_s
        const double* row = &form_[s * n];
        for (int t = 0; t < n; ++t) {
            if (t == s || row[t] == 0.0) continue;
            for (int i = 0; i < n; ++i) mat[i * n + t] -= row[t] * mat[i * n + s];
        }
        for (int i = 0; i < n; ++i) mat[i * n + s] = -mat[i * n + s];
    }
    return Element{std::move(canonical)};
}

Element CoxeterSystem::multiply(const Element& a, const Element& b) const {
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;
    Word w = a.word();
    w.insert(w.end(), b.word().begin(), b.word().end());
    return normalize(w);
}

Element CoxeterSystem::inverse(const Element& w) const {
    Word r(w.word().rbegin(), w.word().rend());
    return normalize(r);
}

Element CoxeterSystem::left_multiply(Gen s, const Element& w) const {
    Word word;
    word.reserve(w.word().size() + 1);
    word.push_back(s);
    word.insert(word.end(), w.word().begin(), w.word().end());
    return normalize(word);
}

Element CoxeterSystem::right_multiply(const Element& w, Gen s) const {
    Word word = w.word();
    word.push_back(s);
    return normalize(word);
}

bool CoxeterSystem::is_left_descent(Gen s, const Element& w) const {
    return column_negative(inverse_action(w.word()), s);
}

bool CoxeterSystem::is_right_descent(const Element& w, Gen s) const {
    return column_negative(action(w.word()), s);
}

GenSet CoxeterSystem::descents(const Element& w, Side side) const {
    const auto mat = side == Side::Left ? inverse_action(w.word()) : action(w.word());
    GenSet out;
    for (Gen s = 0; s < rank_; ++s)
        if (column_negative(mat, s)) out.insert(s);
    return out;
}

GenSet CoxeterSystem::support(const Element& w) const {
    GenSet out;
    for (Gen g : w.word()) out.insert(g);
    return out;
}

Element CoxeterSystem::demazure_star(const Element& a, const Element& b) const {
    Element acc = a;
    for (Gen s : b.word())
        if (!is_right_descent(acc, s)) acc = right_multiply(acc, s);
    return acc;
}

Element CoxeterSystem::demazure_fold(std::span<const Gen> word) const {
    Element acc = identity();
    for (Gen s : word) {
        if (s < 0 || s >= rank_) fail(ErrorKind::InvalidWord, "generator index out of range");
        if (!is_right_descent(acc, s)) acc = right_multiply(acc, s);
    }
    return acc;
}

Word CoxeterSystem::parse_word(std::string_view text) const {
    Word out;
    for (std::string_view tok : split_tokens(text)) {
        if (Gen g = index_of(tok); g >= 0) {
            out.push_back(g);
            continue;
        }
        if (is_identity_token(tok)) continue;
        // Greedy longest-name split of a run like "s1s2s1".
        std::size_t pos = 0;
        while (pos < tok.size()) {
            Gen best = -1;
            std::size_t best_len = 0;
            for (Gen g = 0; g < rank_; ++g) {
                const auto& nm = names_[g];
                if (nm.size() > best_len && tok.substr(pos, nm.size()) == nm) {
                    best = g;
                    best_len = nm.size();
                }
            }
            if (best < 0)
                fail(ErrorKind::InvalidWord, "unknown generator in '" + std::string(tok) + "'");
            out.push_back(best);
            pos += best_len;
        }
    }
    return out;
}

GenSet CoxeterSystem::parse_genset(std::string_view text) const {
    std::string cleaned;
    for (char c : text)
        if (c != '{' && c != '}') cleaned.push_back(c);
    GenSet out;
    for (std::string_view tok : split_tokens(cleaned)) {
        if (tok == "\xE2\x88\x85") continue;
        Gen g = index_of(tok);
        if (g < 0) fail(ErrorKind::InvalidWord, "unknown generator '" + std::string(tok) + "'");
        out.insert(g);
    }
    return out;
}

std::string CoxeterSystem::format(const Element& w) const {
    return format_word(w.word());
}

std::string CoxeterSystem::format_word(std::span<const Gen> word) const {
    if (word.empty()) return "e";
    std::string out;
    for (Gen g : word) out += names_.at(g);
    return out;
}

std::string CoxeterSystem::format(GenSet set) const {
    std::string out = "{";
    bool first = true;
    for (Gen g : set.members()) {
        if (!first) out += ",";
        out += names_.at(g);
        first = false;
    }
    return out + "}";
}

std::vector<Element> enumerate_elements(const CoxeterSystem& sys, int max_length) {
    std::vector<Element> all{sys.identity()};
    std::vector<Element> frontier{sys.identity()};
    for (int len = 1; len <= max_length && !frontier.empty(); ++len) {
        std::unordered_set<Element, ElementHash> next;
        for (const auto& w : frontier) {
            const GenSet desc = sys.right_descents(w);
            for (Gen s = 0; s < sys.rank(); ++s)
                if (!desc.contains(s)) next.insert(sys.right_multiply(w, s));
        }
        frontier.assign(next.begin(), next.end());
        std::sort(frontier.begin(), frontier.end());
        all.insert(all.end(), frontier.begin(), frontier.end());
    }
    return all;
}

} // namespace coxbruhat
