#include "coxbruhat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxbruhat/bruhat.hpp"
#include "coxbruhat/core.hpp"
#include "coxbruhat/coset_max.hpp"
#include "coxbruhat/hasse.hpp"
#include "coxbruhat/oracle.hpp"
#include "coxbruhat/parabolic.hpp"
#include "coxbruhat/poincare.hpp"
#include "coxbruhat/presets.hpp"

namespace coxbruhat::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad command-line input; the message names the offending flag.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Dot };

struct Options {
    std::string type;
    std::string matrix_file;
    std::string format = "text";
    int length_cap = kDefaultLengthCap;

    std::string w;
    std::string perm;
    std::string u;
    std::string x;
    std::string J;
    std::string K;
    bool has_K = false;
    std::string side = "right";
    bool trace = false;
    int max_length = 6;
};

// Left-aligned columns separated by two spaces; no trailing blanks.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

Json poly_json(const IntPolynomial& p) {
    Json j;
    j["coeffs"] = p.coeffs();
    return j;
}

class Session {
public:
    Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out), sys_(make_system(opt)) {
        if (opt.format == "json") format_ = Format::Json;
        else if (opt.format == "dot") format_ = Format::Dot;
    }

    const CoxeterSystem& sys() const { return sys_; }
    Format format() const { return format_; }

    Element element(const std::string& flag, const std::string& text) const {
        try {
            return sys_.parse_element(text);
        } catch (const CoxeterError& ex) {
            if (ex.kind() != ErrorKind::InvalidWord) throw;
            throw UsageError(flag + ": " + ex.what());
        }
    }

    Element w() const {
        if (!opt_.perm.empty()) {
            if (!opt_.w.empty()) throw UsageError("--perm: give either --w or --perm, not both");
            if (!is_type_a_) throw UsageError("--perm: one-line notation needs a type A group");
            std::vector<int> one_line;
            for (char c : opt_.perm) {
                if (c == ' ' || c == ',') continue;
                if (c < '1' || c > '9') throw UsageError("--perm: expected digits 1-9, got '" + opt_.perm + "'");
                one_line.push_back(c - '0');
            }
            if (static_cast<int>(one_line.size()) != sys_.rank() + 1)
                throw UsageError("--perm: expected a permutation of 1.." + std::to_string(sys_.rank() + 1));
            try {
                return sys_.normalize(permutation_word(one_line));
            } catch (const CoxeterError& ex) {
                throw UsageError(std::string("--perm: ") + ex.what());
            }
        }
        if (opt_.w.empty()) throw UsageError("--w: an element is required (or --perm for type A)");
        return element("--w", opt_.w);
    }

    GenSet genset(const std::string& flag, const std::string& text) const {
        try {
            return sys_.parse_genset(text);
        } catch (const CoxeterError& ex) {
            throw UsageError(flag + ": " + ex.what());
        }
    }

    std::string fmt(const Element& e) const { return sys_.format(e); }
    std::string fmt(GenSet s) const { return sys_.format(s); }
    Json set_json(GenSet s) const {
        Json arr = Json::array();
        for (Gen g : s.members()) arr.push_back(sys_.name(g));
        return arr;
    }
    Json list_json(const std::vector<Element>& xs) const {
        Json arr = Json::array();
        for (const auto& e : xs) arr.push_back(fmt(e));
        return arr;
    }

    void emit_json(const std::string& command, Json body) const {
        Json doc;
        doc[command] = std::move(body);
        out_ << doc.dump(2) << "\n";
    }

    std::ostream& out() const { return out_; }

private:
    static CoxeterSystem make_system(const Options& opt) {
        if (!opt.type.empty() && !opt.matrix_file.empty())
            throw UsageError("--matrix: give either --type or --matrix, not both");
        if (opt.length_cap <= 0) throw UsageError("--length-cap: must be positive");
        if (!opt.matrix_file.empty()) {
            std::ifstream in(opt.matrix_file);
            if (!in) throw UsageError("--matrix: cannot read '" + opt.matrix_file + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            return system_from_json(buf.str(), opt.length_cap);
        }
        if (opt.type.empty()) throw UsageError("--type: a group is required (--type or --matrix)");
        try {
            return system_from_type(opt.type, opt.length_cap);
        } catch (const CoxeterError& ex) {
            throw UsageError(std::string("--type: ") + ex.what());
        }
    }

    const Options& opt_;
    std::ostream& out_;
    CoxeterSystem sys_;
    Format format_ = Format::Text;
    bool is_type_a_ = !opt_.type.empty() && opt_.type[0] == 'A';
};

// ---------------------------------------------------------------------------
// Subcommands

void cmd_len(const Session& s, const Options&) {
    const Element w = s.w();
    if (s.format() == Format::Json) {
        s.emit_json("len", Json{{"w", s.fmt(w)}, {"length", w.length()}});
        return;
    }
    s.out() << w.length() << "\n";
}

void cmd_leq(const Session& s, const Options& opt) {
    const Element u = s.element("--u", opt.u);
    const Element w = s.w();
    const bool r = leq(s.sys(), u, w);
    if (s.format() == Format::Json) {
        s.emit_json("leq", Json{{"u", s.fmt(u)}, {"w", s.fmt(w)}, {"leq", r}});
        return;
    }
    s.out() << (r ? "true" : "false") << "\n";
}

void cmd_interval(const Session& s, const Options&) {
    const Element w = s.w();
    const Interval iv = lower_interval(s.sys(), w);
    if (s.format() == Format::Json) {
        s.emit_json("interval", Json{{"w", s.fmt(w)},
                                     {"size", iv.members.size()},
                                     {"rank_sizes", iv.rank_sizes},
                                     {"members", s.list_json(iv.members)}});
        return;
    }
    s.out() << "w = " << s.fmt(w) << "\n";
    s.out() << "size = " << iv.members.size() << "\n";
    s.out() << "rank sizes =";
    for (auto c : iv.rank_sizes) s.out() << " " << c;
    s.out() << "\n";
    for (const auto& y : iv.members) s.out() << s.fmt(y) << "\n";
}

void cmd_covers(const Session& s, const Options&) {
    const Element w = s.w();
    const auto cs = covers(s.sys(), w);
    if (s.format() == Format::Json) {
        s.emit_json("covers", Json{{"w", s.fmt(w)}, {"covers", s.list_json(cs)}});
        return;
    }
    for (const auto& c : cs) s.out() << s.fmt(c) << "\n";
}

void cmd_poincare(const Session& s, const Options&) {
    const Element w = s.w();
    const IntPolynomial p = poincare(s.sys(), w);
    if (s.format() == Format::Json) {
        s.emit_json("poincare", Json{{"w", s.fmt(w)}, {"polynomial", poly_json(p)}, {"text", p.to_string()}});
        return;
    }
    s.out() << p.to_string() << "\n";
}

void cmd_poincare_rel(const Session& s, const Options& opt) {
    const Element w = s.w();
    const GenSet J = s.genset("--J", opt.J);
    const IntPolynomial p = relative_poincare(s.sys(), w, J);
    if (s.format() == Format::Json) {
        s.emit_json("poincare-rel", Json{{"w", s.fmt(w)},
                                         {"J", s.set_json(J)},
                                         {"polynomial", poly_json(p)},
                                         {"text", p.to_string()}});
        return;
    }
    s.out() << p.to_string() << "\n";
}

void cmd_decompose(const Session& s, const Options& opt) {
    const Element w = s.w();
    const GenSet J = s.genset("--J", opt.J);
    Side side = Side::Right;
    if (opt.side == "left") side = Side::Left;
    else if (opt.side != "right") throw UsageError("--side: expected 'right' or 'left', got '" + opt.side + "'");
    const auto d = decompose(s.sys(), w, J, side);
    if (s.format() == Format::Json) {
        s.emit_json("decompose", Json{{"w", s.fmt(w)},
                                      {"J", s.set_json(J)},
                                      {"side", opt.side},
                                      {"v", s.fmt(d.v)},
                                      {"u", s.fmt(d.u)}});
        return;
    }
    if (side == Side::Right)
        s.out() << "w = v.u = (" << s.fmt(d.v) << ").(" << s.fmt(d.u) << ")\n";
    else
        s.out() << "w = u.v = (" << s.fmt(d.u) << ").(" << s.fmt(d.v) << ")\n";
    s.out() << "v = " << s.fmt(d.v) << "\n";
    s.out() << "u = " << s.fmt(d.u) << "\n";
}

void cmd_coset_rep(const Session& s, const Options& opt) {
    const Element w = s.w();
    const GenSet J = s.genset("--J", opt.J);
    const Element x = coset_rep(s.sys(), w, J);
    if (s.format() == Format::Json) {
        s.emit_json("coset-rep", Json{{"w", s.fmt(w)}, {"J", s.set_json(J)}, {"x", s.fmt(x)}});
        return;
    }
    s.out() << s.fmt(x) << "\n";
}

Json trace_json(const Session& s, const RecursionLevel& lvl) {
    Json j;
    j["w"] = s.fmt(lvl.w);
    j["x"] = s.fmt(lvl.x);
    j["x_left_descents"] = s.set_json(lvl.x_left_descents);
    j["u"] = s.fmt(lvl.u);
    j["v"] = s.fmt(lvl.v);
    j["J_prime"] = s.set_json(lvl.j_prime);
    j["s"] = lvl.s ? Json(s.sys().name(*lvl.s)) : Json(nullptr);
    j["q_prime"] = s.fmt(lvl.q_prime);
    j["q_double_prime"] = s.fmt(lvl.q_double_prime);
    j["q"] = s.fmt(lvl.q);
    return j;
}

std::string trace_line(const Session& s, const RecursionLevel& lvl) {
    if (!lvl.s)
        return "x = e, w = " + s.fmt(lvl.w) + ", q = max of [e,w] in W_J = " + s.fmt(lvl.q);
    return "x = " + s.fmt(lvl.x) + ", D_L(x) = " + s.fmt(lvl.x_left_descents) + ", w = u.v = (" +
           s.fmt(lvl.u) + ").(" + s.fmt(lvl.v) + "), J' = " + s.fmt(lvl.j_prime) +
           ", q = q' * (s.q'') = " + s.fmt(lvl.q_prime) + " * (" + s.sys().name(*lvl.s) + "." +
           s.fmt(lvl.q_double_prime) + ") = " + s.fmt(lvl.q);
}

void cmd_max_coset(const Session& s, const Options& opt) {
    const Element w = s.w();
    const Element x = s.element("--x", opt.x);
    const GenSet J = s.genset("--J", opt.J);
    const CosetMaxResult r = max_in_coset(s.sys(), w, x, J);
    if (s.format() == Format::Json) {
        Json trace = Json::array();
        for (const auto& lvl : r.trace) trace.push_back(trace_json(s, lvl));
        s.emit_json("max-coset", Json{{"w", s.fmt(w)},
                                      {"x", s.fmt(x)},
                                      {"J", s.set_json(J)},
                                      {"q", s.fmt(r.q)},
                                      {"m", s.fmt(r.m)},
                                      {"trace", trace}});
        return;
    }
    s.out() << "q = " << s.fmt(r.q) << "\n";
    s.out() << "m = " << s.fmt(r.m) << "\n";
    if (opt.trace) {
        s.out() << "trace:\n";
        for (const auto& lvl : r.trace) s.out() << "  " << trace_line(s, lvl) << "\n";
    }
}

void cmd_mj_table(const Session& s, const Options& opt) {
    const Element w = s.w();
    const GenSet J = s.genset("--J", opt.J);
    const ShiftedMaxSet set = shifted_max_set(s.sys(), w, J);
    if (s.format() == Format::Json) {
        Json rows = Json::array();
        for (const auto& [x, m] : set.pairs) rows.push_back(Json{{"x", s.fmt(x)}, {"m", s.fmt(m)}});
        s.emit_json("mj-table", Json{{"w", s.fmt(w)}, {"J", s.set_json(J)}, {"rows", rows}});
        return;
    }
    s.out() << "w = " << s.fmt(w) << "\n";
    s.out() << "J = " << s.fmt(J) << "\n";
    std::vector<std::vector<std::string>> rows{{"x", "m_J(w,x)"}};
    for (const auto& [x, m] : set.pairs) rows.push_back({s.fmt(x), s.fmt(m)});
    s.out() << render_table(rows);
}

void cmd_max_set(const Session& s, const Options& opt) {
    const Element w = s.w();
    const GenSet J = s.genset("--J", opt.J);
    const ShiftedMaxSet set = shifted_max_set(s.sys(), w, J);
    if (s.format() == Format::Json) {
        Json pairs = Json::array();
        for (const auto& [x, m] : set.pairs) pairs.push_back(Json{{"x", s.fmt(x)}, {"m", s.fmt(m)}});
        s.emit_json("max-set", Json{{"w", s.fmt(w)},
                                    {"J", s.set_json(J)},
                                    {"pairs", pairs},
                                    {"values", s.list_json(set.values)}});
        return;
    }
    for (const auto& m : set.values) s.out() << s.fmt(m) << "\n";
}

void cmd_rel_max(const Session& s, const Options& opt, const std::string& name) {
    const Element w = s.w();
    const Element x = s.element("--x", opt.x);
    const GenSet J = s.genset("--J", opt.J);
    const GenSet K = s.genset("--K", opt.K);
    const RelativeCosetMaxResult r = max_in_relative_coset(s.sys(), w, x, J, K);
    if (s.format() == Format::Json) {
        s.emit_json(name, Json{{"w", s.fmt(w)},
                               {"x", s.fmt(x)},
                               {"J", s.set_json(J)},
                               {"K", s.set_json(K)},
                               {"q_K", s.fmt(r.outer.q)},
                               {"q", s.fmt(r.q)},
                               {"m", s.fmt(r.m)}});
        return;
    }
    s.out() << "q_K = " << s.fmt(r.outer.q) << "\n";
    s.out() << "q = " << s.fmt(r.q) << "\n";
    if (name == "fiber")
        s.out() << "fiber index m^J_K(w,x) = " << s.fmt(r.m) << "\n";
    else
        s.out() << "m = " << s.fmt(r.m) << "\n";
}

void cmd_bp(const Session& s, const Options& opt) {
    const Element w = s.w();
    const GenSet J = s.genset("--J", opt.J);
    const BPReport r = bp_report(s.sys(), w, J);
    if (s.format() == Format::Json) {
        Json fact = nullptr;
        if (r.factorization)
            fact = Json{{"P_v", poly_json(r.factorization->first)}, {"P_u", poly_json(r.factorization->second)}};
        s.emit_json("bp", Json{{"w", s.fmt(w)},
                               {"J", s.set_json(J)},
                               {"v", s.fmt(r.v)},
                               {"u", s.fmt(r.u)},
                               {"u_max", s.fmt(r.u_max)},
                               {"is_bp", r.is_bp},
                               {"factorization", fact}});
        return;
    }
    s.out() << "w = " << s.fmt(w) << "\n";
    s.out() << "J = " << s.fmt(J) << "\n";
    s.out() << "v = " << s.fmt(r.v) << "\n";
    s.out() << "u = " << s.fmt(r.u) << "\n";
    s.out() << "u_max = " << s.fmt(r.u_max) << "\n";
    if (r.is_bp) {
        s.out() << "BP: P_w = P^J_v * P_u = (" << r.factorization->first.to_string() << ")("
                << r.factorization->second.to_string() << ")\n";
    } else {
        s.out() << "not BP: u != u_max\n";
    }
}

void cmd_poincare_decomp(const Session& s, const Options& opt) {
    const Element w = s.w();
    const GenSet J = s.genset("--J", opt.J);
    const bool relative = opt.has_K;
    const PoincareDecomposition d = relative
                                        ? relative_decompose_poincare(s.sys(), w, J, s.genset("--K", opt.K))
                                        : decompose_poincare(s.sys(), w, J);
    if (s.format() == Format::Json) {
        Json terms = Json::array();
        for (const auto& t : d.terms)
            terms.push_back(Json{{"x", s.fmt(t.x)}, {"shift", t.shift}, {"m", s.fmt(t.m)}, {"factor", poly_json(t.factor)}});
        Json body{{"w", s.fmt(w)}, {"J", s.set_json(J)}};
        if (d.K) body["K"] = s.set_json(*d.K);
        body["terms"] = terms;
        body["grouped"] = d.factored_string();
        body["total"] = poly_json(d.total);
        body["factorization"] = d.factorization ? Json::array({poly_json(d.factorization->first),
                                                               poly_json(d.factorization->second)})
                                                : Json(nullptr);
        s.emit_json("poincare-decomp", body);
        return;
    }
    s.out() << "w = " << s.fmt(w) << "\n";
    s.out() << "J = " << s.fmt(J) << "\n";
    if (d.K) s.out() << "K = " << s.fmt(*d.K) << "\n";
    std::vector<std::vector<std::string>> rows{
        {"x", "shift", relative ? "m^J_K(w,x)" : "m_J(w,x)", relative ? "P^J_m" : "P_m"}};
    for (const auto& t : d.terms)
        rows.push_back({s.fmt(t.x), IntPolynomial::monomial(t.shift).to_string(), s.fmt(t.m), t.factor.to_string()});
    s.out() << render_table(rows);
    const std::string lhs = relative ? "P^J_w" : "P_w";
    s.out() << lhs << " = " << d.factored_string() << "\n";
    s.out() << std::string(lhs.size(), ' ') << " = " << d.total.to_string() << "\n";
    if (d.factorization) {
        s.out() << "factorization: (" << d.factorization->first.to_string() << ")("
                << d.factorization->second.to_string() << ")\n";
    }
}

void cmd_bp_scan(const Session& s, const Options&) {
    const Element w = s.w();
    const std::uint64_t subsets = std::uint64_t{1} << s.sys().rank();
    std::vector<BPReport> reports;
    for (std::uint64_t mask = 0; mask < subsets; ++mask)
        reports.push_back(bp_report(s.sys(), w, GenSet::from_mask(mask)));
    if (s.format() == Format::Json) {
        Json rows = Json::array();
        for (const auto& r : reports)
            rows.push_back(Json{{"J", s.set_json(r.J)},
                                {"v", s.fmt(r.v)},
                                {"u", s.fmt(r.u)},
                                {"u_max", s.fmt(r.u_max)},
                                {"is_bp", r.is_bp}});
        s.emit_json("bp-scan", Json{{"w", s.fmt(w)}, {"rows", rows}});
        return;
    }
    s.out() << "w = " << s.fmt(w) << "\n";
    std::vector<std::vector<std::string>> rows{{"J", "v", "u", "u_max", "BP"}};
    for (const auto& r : reports)
        rows.push_back({s.fmt(r.J), s.fmt(r.v), s.fmt(r.u), s.fmt(r.u_max), r.is_bp ? "yes" : "no"});
    s.out() << render_table(rows);
}

void cmd_hasse(const Session& s, const Options& opt) {
    const Element w = s.w();
    std::optional<GenSet> J;
    if (!opt.J.empty()) J = s.genset("--J", opt.J);
    const HasseDiagram d = hasse_diagram(s.sys(), w, J);
    if (s.format() == Format::Json) {
        Json nodes = Json::array();
        for (std::size_t i = 0; i < d.nodes.size(); ++i)
            nodes.push_back(Json{{"label", s.fmt(d.nodes[i])},
                                 {"coset_rep", s.fmt(d.coset_reps[i])},
                                 {"color", kCosetPalette[d.color_index[i] % 4]}});
        Json edges = Json::array();
        for (const auto& [lo, hi] : d.edges) edges.push_back(Json::array({lo, hi}));
        s.emit_json("hasse", Json{{"w", s.fmt(w)},
                                  {"J", J ? s.set_json(*J) : Json(nullptr)},
                                  {"nodes", nodes},
                                  {"edges", edges}});
        return;
    }
    s.out() << to_dot(s.sys(), d);
}

void cmd_verify(const Session& s, const Options& opt) {
    if (opt.max_length < 0) throw UsageError("--max-length: must be nonnegative");
    const auto elements = enumerate_elements(s.sys(), opt.max_length);
    const oracle::SweepReport r = oracle::sweep_coset_max(s.sys(), elements);
    if (s.format() == Format::Json) {
        s.emit_json("verify", Json{{"elements", elements.size()},
                                   {"triples", r.triples},
                                   {"failures", r.failures}});
    } else {
        s.out() << "elements = " << elements.size() << "\n";
        s.out() << "triples = " << r.triples << "\n";
        s.out() << "failures = " << r.failures.size() << "\n";
        for (const auto& f : r.failures) s.out() << "  " << f << "\n";
        s.out() << (r.ok() ? "OK" : "FAILED") << "\n";
    }
    if (!r.ok()) throw CoxeterError(ErrorKind::InternalAssertionFailed, "oracle disagreement");
}

// ---------------------------------------------------------------------------

struct Command {
    std::string name;
    std::string help;
    std::vector<std::string> flags; // which per-command options it takes
    std::function<void(const Session&, const Options&)> run;
};

std::vector<Command> commands() {
    return {
        {"len", "length of w", {"w"}, cmd_len},
        {"leq", "Bruhat comparison u <= w", {"w", "u"}, cmd_leq},
        {"interval", "lower interval [e,w]", {"w"}, cmd_interval},
        {"covers", "elements covered by w", {"w"}, cmd_covers},
        {"poincare", "Poincare polynomial P_w", {"w"}, cmd_poincare},
        {"poincare-rel", "relative Poincare polynomial P^J_w", {"w", "J"}, cmd_poincare_rel},
        {"decompose", "parabolic decomposition", {"w", "J", "side"}, cmd_decompose},
        {"coset-rep", "minimal representative of wW_J", {"w", "J"}, cmd_coset_rep},
        {"max-coset", "maximum of [e,w] cap xW_J", {"w", "x", "J", "trace"}, cmd_max_coset},
        {"mj-table", "m_J(w,x) for every x in [e,w] cap W^J", {"w", "J"}, cmd_mj_table},
        {"max-set", "the set M_J(w) of shifted maxima", {"w", "J"}, cmd_max_set},
        {"rel-max", "maximum of [e,w]^J cap xW^J_K", {"w", "x", "J", "Kreq"},
         [](const Session& s, const Options& o) { cmd_rel_max(s, o, "rel-max"); }},
        {"fiber", "Schubert fiber index m^J_K(w,x)", {"w", "x", "J", "Kreq"},
         [](const Session& s, const Options& o) { cmd_rel_max(s, o, "fiber"); }},
        {"bp", "Billey-Postnikov test for w = vu", {"w", "J"}, cmd_bp},
        {"poincare-decomp", "coset decomposition of P_w (P^J_w with --K)", {"w", "J", "K"}, cmd_poincare_decomp},
        {"bp-scan", "BP test for every subset J", {"w"}, cmd_bp_scan},
        {"hasse", "Hasse diagram of [e,w] (DOT)", {"w", "J"}, cmd_hasse},
        {"verify", "oracle sweep over short elements", {"max-length"}, cmd_verify},
    };
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Bruhat intervals and parabolic cosets in Coxeter groups", "coxbruhat"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--type", opt.type, "A<n>, B<n>, D<n>, F4, H3, H4, I2:<m>, I2:inf, affA<n>");
    app.add_option("--matrix", opt.matrix_file, "Coxeter matrix JSON file");
    app.add_option("--format", opt.format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--length-cap", opt.length_cap, "maximum element length");

    const auto cmds = commands();
    std::map<const CLI::App*, const Command*> by_app;
    for (const auto& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        for (const auto& f : c.flags) {
            if (f == "w") {
                sub->add_option("--w", opt.w, "element as a word, e.g. \"s1 s2 s1\"");
                sub->add_option("--perm", opt.perm, "type A only: one-line notation, e.g. 4231");
            } else if (f == "u") {
                sub->add_option("--u", opt.u, "element")->required();
            } else if (f == "x") {
                sub->add_option("--x", opt.x, "coset representative")->required();
            } else if (f == "J") {
                sub->add_option("--J", opt.J, "comma-separated generators");
            } else if (f == "K") {
                sub->add_option("--K", opt.K, "comma-separated generators, J subset of K");
            } else if (f == "Kreq") {
                sub->add_option("--K", opt.K, "comma-separated generators, J subset of K")->required();
            } else if (f == "side") {
                sub->add_option("--side", opt.side, "right or left");
            } else if (f == "trace") {
                sub->add_flag("--trace", opt.trace, "print the recursion levels");
            } else if (f == "max-length") {
                sub->add_option("--max-length", opt.max_length, "longest element to sweep");
            }
        }
        by_app[sub] = &c;
    }

    std::vector<std::string> argv_store{"coxbruhat"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }

    const Command* chosen = nullptr;
    for (const CLI::App* sub : app.get_subcommands()) {
        chosen = by_app.at(sub);
        if (const CLI::Option* k = sub->get_option_no_throw("--K")) opt.has_K = k->count() > 0;
    }

    try {
        Session session(opt, out);
        if (session.format() == Format::Dot && chosen->name != "hasse")
            throw UsageError("--format: dot output is only available for hasse");
        chosen->run(session, opt);
    } catch (const UsageError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const CoxeterError& ex) {
        err << "error: " << ex.name() << ": " << ex.what() << "\n";
        return kExitDomainError;
    }
    return kExitOk;
}

} // namespace coxbruhat::cli
