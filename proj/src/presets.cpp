#include "coxbruhat/presets.hpp"

#include <algorithm>
#include <charconv>

#include <json.hpp>

namespace coxbruhat {

namespace {

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
    return names;
}

// Path diagram s1 - s2 - ... - sn with all bonds 3.
std::vector<std::vector<int>> path_matrix(int n) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
    return m;
}

void set_bond(std::vector<std::vector<int>>& m, int i, int j, int value) {
    m[i][j] = m[j][i] = value;
}

void require_rank(bool ok, std::string_view type) {
    if (!ok) fail(ErrorKind::InvalidCoxeterMatrix, "unsupported rank for type " + std::string(type));
}

int parse_int(std::string_view text, std::string_view type) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        fail(ErrorKind::InvalidCoxeterMatrix, "malformed Coxeter type '" + std::string(type) + "'");
    return value;
}

} // namespace

CoxeterSystem type_a(int n, int length_cap) {
    require_rank(n >= 1, "A");
    return {default_names(n), path_matrix(n), length_cap};
}

CoxeterSystem type_b(int n, int length_cap) {
    require_rank(n >= 2, "B");
    auto m = path_matrix(n);
    set_bond(m, n - 2, n - 1, 4);
    return {default_names(n), m, length_cap};
}

CoxeterSystem type_d(int n, int length_cap) {
    require_rank(n >= 4, "D");
    auto m = path_matrix(n);
    set_bond(m, n - 2, n - 1, 2);
    set_bond(m, n - 3, n - 1, 3);
    return {default_names(n), m, length_cap};
}

CoxeterSystem type_f4(int length_cap) {
    auto m = path_matrix(4);
    set_bond(m, 1, 2, 4);
    return {default_names(4), m, length_cap};
}

CoxeterSystem type_h(int n, int length_cap) {
    require_rank(n == 3 || n == 4, "H");
    auto m = path_matrix(n);
    set_bond(m, 0, 1, 5);
    return {default_names(n), m, length_cap};
}

CoxeterSystem type_i2(int order, int length_cap) {
    if (order != kInfinity && order < 2)
        fail(ErrorKind::InvalidCoxeterMatrix, "I2(m) needs m >= 2 or m = infinity");
    std::vector<std::vector<int>> m{{1, order}, {order, 1}};
    return {default_names(2), m, length_cap};
}

CoxeterSystem type_affine_a(int n, int length_cap) {
    require_rank(n >= 1, "affine A");
    if (n == 1) return type_i2(kInfinity, length_cap);
    auto m = path_matrix(n + 1);
    set_bond(m, 0, n, 3);
    return {default_names(n + 1), m, length_cap};
}

CoxeterSystem system_from_type(std::string_view type, int length_cap) {
    auto bad = [&] {
        fail(ErrorKind::InvalidCoxeterMatrix, "unknown Coxeter type '" + std::string(type) + "'");
    };
    if (type.starts_with("I2:") || type.starts_with("I2(")) {
        std::string_view arg = type.substr(3);
        if (type[2] == '(') {
            if (!arg.ends_with(")")) bad();
            arg.remove_suffix(1);
        }
        if (arg == "inf" || arg == "0") return type_i2(kInfinity, length_cap);
        return type_i2(parse_int(arg, type), length_cap);
    }
    if (type.starts_with("affA")) return type_affine_a(parse_int(type.substr(4), type), length_cap);
    if (type.size() < 2) bad();
    const int n = parse_int(type.substr(1), type);
    switch (type[0]) {
    case 'A': return type_a(n, length_cap);
    case 'B': return type_b(n, length_cap);
    case 'D': return type_d(n, length_cap);
    case 'F':
        require_rank(n == 4, "F");
        return type_f4(length_cap);
    case 'H': return type_h(n, length_cap);
    default: bad();
    }
    bad();
    return type_a(1); // unreachable
}

Word permutation_word(const std::vector<int>& one_line) {
    const int n = static_cast<int>(one_line.size());
    std::vector<int> p = one_line;
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i + 1) fail(ErrorKind::InvalidWord, "not a permutation of 1.." + std::to_string(n));
    // Strip right descents: w = (w s_i) s_i, so letters come out last-first.
    Word reversed;
    for (;;) {
        int i = 0;
        while (i + 1 < n && p[i] < p[i + 1]) ++i;
        if (i + 1 >= n) break;
        std::swap(p[i], p[i + 1]);
        reversed.push_back(i);
    }
    return {reversed.rbegin(), reversed.rend()};
}

CoxeterSystem system_from_json(std::string_view json_text, int length_cap) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& ex) {
        fail(ErrorKind::InvalidCoxeterMatrix, std::string("matrix file is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("generators") || !doc.contains("m"))
        fail(ErrorKind::InvalidCoxeterMatrix, "matrix file needs \"generators\" and \"m\"");
    try {
        auto names = doc.at("generators").get<std::vector<std::string>>();
        auto m = doc.at("m").get<std::vector<std::vector<int>>>();
        return {std::move(names), std::move(m), length_cap};
    } catch (const nlohmann::json::exception& ex) {
        fail(ErrorKind::InvalidCoxeterMatrix, std::string("malformed matrix file: ") + ex.what());
    }
}

std::string system_to_json(const CoxeterSystem& sys) {
    nlohmann::ordered_json doc;
    doc["generators"] = sys.names();
    doc["m"] = sys.matrix();
    return doc.dump();
}

} // namespace coxbruhat
