// Copyright 2026 The fcspec authors
// SPDX-License-Identifier: Apache-2.0
#include "render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "catalog.hpp"

namespace fcspec {

namespace {

using nlohmann::json;

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* tri_text(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "vacuous";
    }
}
const char* verdict_text(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::vacuous: return "vacuous";
        default: return "FALSIFIED";
    }
}

std::vector<std::pair<std::string, bool>> predicate_rows(const ClassPredicates& p) {
    return {
        {"atomic", p.atomic},
        {"b-coprime", p.b_coprime},
        {"colocal", p.colocal},
        {"comultiplication", p.comultiplication},
        {"duo", p.duo},
        {"every-prime-maximal", p.every_prime_maximal_s},
        {"fc-coprimeless", p.fc_coprimeless},
        {"fc-coradical-module", p.fc_coradical_module},
        {"fi-atomic", p.fi_atomic},
        {"fully-coprime-module", p.fully_coprime_module},
        {"intrinsically-injective", p.intrinsically_injective},
        {"min-property", p.min_property},
        {"multiplication", p.multiplication},
        {"s-iad", p.s_iad},
        {"self-cogenerator", p.self_cogenerator},
        {"self-injective", p.self_injective},
        {"top-fc", p.top_fc},
        {"uniform", p.uniform},
    };
}

std::string join_labels(const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ", ";
        out += labels[i];
    }
    return out;
}

std::string set_text(const std::vector<std::string>& labels) {
    return "{" + join_labels(labels) + "}";
}

json check_to_json(const TheoremCheck& c) {
    json j;
    j["id"] = c.id;
    json hyps = json::object();
    for (const auto& [name, value] : c.hypotheses) hyps[name] = value;
    j["hypotheses"] = hyps;
    j["verdict"] = verdict_text(c.verdict);
    j["details"] = c.details;
    return j;
}

json summary_to_json(const VerificationReport& rep) {
    json j;
    j["name"] = rep.module_name;
    j["ring"] = rep.ring_desc;
    j["module"] = rep.module_desc;
    j["submodules"] = rep.submodule_count;
    j["fully_invariant"] = rep.fi_count;
    j["endomorphisms"] = rep.endo_count;
    j["spectrum"] = rep.point_labels;
    j["simples"] = rep.simple_labels;
    j["fi_simples"] = rep.fi_simple_labels;
    j["e_prime"] = rep.eprime_labels;
    j["socle"] = rep.socle_label;
    j["corad_of_module"] = rep.corad_m_label;
    j["fc_coradicals"] = rep.coradical_labels;
    json preds = json::object();
    for (const auto& [name, value] : predicate_rows(rep.preds)) preds[name] = value;
    j["predicates"] = preds;
    return j;
}

void append_predicates_text(std::ostringstream& os, const ClassPredicates& preds) {
    os << "predicates:\n";
    for (const auto& [name, value] : predicate_rows(preds)) {
        os << "  " << name;
        for (std::size_t pad = name.size(); pad < 26; ++pad) os << ' ';
        os << yesno(value) << "\n";
    }
}

std::string fuzz_counts_line(const VerificationReport& rep) {
    std::ostringstream os;
    os << "verified " << rep.count(Verdict::verified) << ", vacuous "
       << rep.count(Verdict::vacuous) << ", falsified " << rep.count(Verdict::falsified);
    return os.str();
}

}  // namespace

TopologyReport topology_report(const ModuleAnalysis& a, SpaceKind kind) {
    const FiniteSpace sp = build_space(a, kind);
    TopologyReport rep;
    rep.module_name = a.module->name();
    rep.kind = kind;
    for (auto p : a.points) rep.point_labels.push_back(a.label(p));
    for (std::size_t c = 0; c < sp.closed.size(); ++c) {
        std::vector<std::string> members;
        for (auto p = sp.closed[c].find_first(); p != Bitset::npos; p = sp.closed[c].find_next(p))
            members.push_back(a.label(a.points[p]));
        rep.closed_sets.emplace_back(std::move(members), a.label(sp.closed_rep[c]));
    }
    rep.sep = separation(sp);
    rep.conn = connectivity(sp);
    rep.comp = compactness(sp);
    rep.top_fc = a.preds.top_fc;
    const auto sober = generic_points_and_sober(a, sp);
    rep.sober = sober.sober;
    for (const auto& comp : sober.components) {
        std::vector<std::string> members;
        for (auto p = comp.find_first(); p != Bitset::npos; p = comp.find_next(p))
            members.push_back(a.label(a.points[p]));
        std::string generic = "-";
        for (const auto& [closed_idx, generics] : sober.generic_points)
            if (sp.closed[closed_idx] == comp && generics.size() == 1)
                generic = a.label(a.points[generics[0]]);
        rep.components.emplace_back(std::move(members), std::move(generic));
    }
    return rep;
}

std::string render_spec(const VerificationReport& rep, bool json_output) {
    if (json_output) {
        json j;
        j["schema"] = kReportSchema;
        j["kind"] = "spec";
        j["report"] = summary_to_json(rep);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "schema: " << kReportSchema << "\n";
    os << "module: " << rep.module_name << "\n";
    os << "ring: " << rep.ring_desc << "\n";
    os << "group: " << rep.module_desc << "\n";
    os << "submodules: " << rep.submodule_count << " (fully invariant: " << rep.fi_count << ")\n";
    os << "endomorphisms: " << rep.endo_count << "\n";
    os << "simples (" << rep.simple_labels.size() << "): " << join_labels(rep.simple_labels)
       << "\n";
    os << "fi-simples (" << rep.fi_simple_labels.size()
       << "): " << join_labels(rep.fi_simple_labels) << "\n";
    os << "socle: " << rep.socle_label << "\n";
    os << "spectrum (" << rep.point_labels.size() << " point"
       << (rep.point_labels.size() == 1 ? "" : "s") << "): " << join_labels(rep.point_labels)
       << "\n";
    os << "e-prime (" << rep.eprime_labels.size() << "): " << join_labels(rep.eprime_labels)
       << "\n";
    os << "corad(M): " << rep.corad_m_label << "\n";
    os << "fc-coradicals (" << rep.coradical_labels.size()
       << "): " << join_labels(rep.coradical_labels) << "\n";
    append_predicates_text(os, rep.preds);
    return os.str();
}

std::string render_topology(const TopologyReport& rep, bool json_output) {
    const char* kind_text =
        rep.kind == SpaceKind::all_submodules ? "all-submodules" : "fully-invariant";
    if (json_output) {
        json j;
        j["schema"] = kReportSchema;
        j["kind"] = "topology";
        j["name"] = rep.module_name;
        j["space"] = kind_text;
        j["points"] = rep.point_labels;
        json closed = json::array();
        for (const auto& [members, generator] : rep.closed_sets) {
            json c;
            c["members"] = members;
            c["variety_of"] = generator;
            closed.push_back(c);
        }
        j["closed_sets"] = closed;
        json sep;
        sep["T0"] = rep.sep.t0;
        sep["T1"] = rep.sep.t1;
        sep["T2"] = rep.sep.t2;
        sep["discrete"] = rep.sep.discrete;
        j["separation"] = sep;
        json conn;
        conn["connected"] = tri_text(rep.conn.connected);
        conn["irreducible"] = tri_text(rep.conn.irreducible);
        conn["ultraconnected"] = tri_text(rep.conn.ultraconnected);
        j["connectivity"] = conn;
        j["compact"] = rep.comp.compact;
        j["countably_compact"] = rep.comp.countably_compact;
        j["sober"] = rep.sober;
        j["top_fc"] = rep.top_fc;
        json comps = json::array();
        for (const auto& [members, generic] : rep.components) {
            json c;
            c["members"] = members;
            c["generic_point"] = generic;
            comps.push_back(c);
        }
        j["components"] = comps;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "schema: " << kReportSchema << "\n";
    os << "module: " << rep.module_name << "\n";
    os << "space: " << kind_text << "\n";
    os << "points (" << rep.point_labels.size() << "): " << join_labels(rep.point_labels) << "\n";
    os << "closed sets (" << rep.closed_sets.size() << "):\n";
    for (const auto& [members, generator] : rep.closed_sets)
        os << "  " << set_text(members) << " = V(" << generator << ")\n";
    os << "separation: T0 " << yesno(rep.sep.t0) << ", T1 " << yesno(rep.sep.t1) << ", T2 "
       << yesno(rep.sep.t2) << ", discrete " << yesno(rep.sep.discrete) << "\n";
    os << "connectivity: connected " << tri_text(rep.conn.connected) << ", irreducible "
       << tri_text(rep.conn.irreducible) << ", ultraconnected "
       << tri_text(rep.conn.ultraconnected) << "\n";
    os << "compact: " << yesno(rep.comp.compact) << ", countably compact: "
       << yesno(rep.comp.countably_compact) << "\n";
    os << "sober: " << yesno(rep.sober) << "\n";
    os << "top-fc: " << yesno(rep.top_fc) << "\n";
    os << "components (" << rep.components.size() << "):\n";
    for (const auto& [members, generic] : rep.components)
        os << "  " << set_text(members) << " generic " << generic << "\n";
    os << "summary: " << rep.point_labels.size() << " point"
       << (rep.point_labels.size() == 1 ? "" : "s") << ";";
    std::vector<std::string> tags;
    if (rep.sep.discrete) tags.push_back("discrete");
    if (rep.sep.t2) tags.push_back("T2");
    tags.push_back(tri_bool(rep.conn.connected) ? "connected" : "disconnected");
    if (tri_bool(rep.conn.irreducible)) tags.push_back("irreducible");
    if (tri_bool(rep.conn.ultraconnected)) tags.push_back("ultraconnected");
    tags.push_back(rep.sober ? "sober" : "not sober");
    for (std::size_t i = 0; i < tags.size(); ++i) os << (i ? ", " : " ") << tags[i];
    os << "\n";
    return os.str();
}

namespace {

std::vector<const TheoremCheck*> filtered_checks(const VerificationReport& rep,
                                                 const std::vector<std::string>& filter) {
    if (!filter.empty()) {
        const auto& ids = theorem_registry_ids();
        for (const auto& want : filter)
            if (std::find(ids.begin(), ids.end(), want) == ids.end()) {
                std::string msg = "unknown theorem id \"" + want + "\"; known ids:";
                for (const auto& id : ids) msg += " " + id;
                throw ValidationError(msg);
            }
    }
    std::vector<const TheoremCheck*> out;
    for (const auto& c : rep.checks)
        if (filter.empty() || std::find(filter.begin(), filter.end(), c.id) != filter.end())
            out.push_back(&c);
    return out;
}

void verify_text_body(std::ostringstream& os, const VerificationReport& rep,
                      const std::vector<const TheoremCheck*>& checks) {
    os << "module: " << rep.module_name << "\n";
    os << "checks (" << checks.size() << "):\n";
    std::size_t verified = 0, vacuous = 0, falsified = 0;
    for (const auto* c : checks) {
        os << "  " << c->id;
        for (std::size_t pad = c->id.size(); pad < 22; ++pad) os << ' ';
        os << verdict_text(c->verdict);
        if (!c->hypotheses.empty()) {
            os << "  [";
            for (std::size_t i = 0; i < c->hypotheses.size(); ++i) {
                if (i) os << ' ';
                os << c->hypotheses[i].first << '=' << yesno(c->hypotheses[i].second);
            }
            os << "]";
        }
        os << "\n";
        for (const auto& d : c->details) os << "    - " << d << "\n";
        switch (c->verdict) {
            case Verdict::verified: ++verified; break;
            case Verdict::vacuous: ++vacuous; break;
            default: ++falsified; break;
        }
    }
    os << "summary: verified " << verified << ", vacuous " << vacuous << ", falsified "
       << falsified << "\n";
}

}  // namespace

std::string render_verify(const VerificationReport& rep, const std::vector<std::string>& filter,
                          bool json_output) {
    const auto checks = filtered_checks(rep, filter);
    if (json_output) {
        json j;
        j["schema"] = kReportSchema;
        j["kind"] = "verify";
        j["report"] = summary_to_json(rep);
        json arr = json::array();
        for (const auto* c : checks) arr.push_back(check_to_json(*c));
        j["checks"] = arr;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "schema: " << kReportSchema << "\n";
    verify_text_body(os, rep, checks);
    return os.str();
}

std::string render_verify_many(const std::vector<VerificationReport>& reps, bool json_output) {
    if (json_output) {
        json j;
        j["schema"] = kReportSchema;
        j["kind"] = "verify-catalog";
        json arr = json::array();
        std::size_t falsified = 0;
        for (const auto& rep : reps) {
            json entry;
            entry["report"] = summary_to_json(rep);
            json checks = json::array();
            for (const auto& c : rep.checks) checks.push_back(check_to_json(c));
            entry["checks"] = checks;
            arr.push_back(entry);
            falsified += rep.count(Verdict::falsified);
        }
        j["modules"] = arr;
        j["falsified"] = falsified;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "schema: " << kReportSchema << "\n";
    std::size_t falsified = 0;
    for (const auto& rep : reps) {
        verify_text_body(os, rep, filtered_checks(rep, {}));
        falsified += rep.count(Verdict::falsified);
    }
    os << "total falsified: " << falsified << "\n";
    return os.str();
}

std::string render_fuzz(const FuzzResult& result, const FuzzConfig& cfg, bool json_output) {
    std::size_t verified = 0, vacuous = 0, falsified = 0;
    for (const auto& rep : result.reports) {
        verified += rep.count(Verdict::verified);
        vacuous += rep.count(Verdict::vacuous);
        falsified += rep.count(Verdict::falsified);
    }
    if (json_output) {
        json j;
        j["schema"] = kReportSchema;
        j["kind"] = "fuzz";
        j["seed"] = cfg.seed;
        j["count"] = cfg.count;
        j["max_size"] = cfg.max_size;
        json arr = json::array();
        for (const auto& rep : result.reports) {
            json entry;
            entry["name"] = rep.module_name;
            entry["verified"] = rep.count(Verdict::verified);
            entry["vacuous"] = rep.count(Verdict::vacuous);
            entry["falsified"] = rep.count(Verdict::falsified);
            json fals = json::array();
            for (const auto& c : rep.checks)
                if (c.verdict == Verdict::falsified) fals.push_back(check_to_json(c));
            entry["falsified_checks"] = fals;
            arr.push_back(entry);
        }
        j["modules"] = arr;
        j["verified"] = verified;
        j["vacuous"] = vacuous;
        j["falsified"] = falsified;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "schema: " << kReportSchema << "\n";
    os << "fuzz: seed " << cfg.seed << ", count " << cfg.count << ", max-size " << cfg.max_size
       << "\n";
    for (std::size_t i = 0; i < result.reports.size(); ++i) {
        const auto& rep = result.reports[i];
        std::ostringstream idx;
        idx << (i + 1);
        std::string pad(4 > idx.str().size() ? 4 - idx.str().size() : 0, '0');
        os << "  " << pad << idx.str() << " " << rep.module_name;
        for (std::size_t p = rep.module_name.size(); p < 28; ++p) os << ' ';
        os << fuzz_counts_line(rep) << "\n";
        for (const auto& c : rep.checks)
            if (c.verdict == Verdict::falsified) {
                os << "       FALSIFIED " << c.id << "\n";
                for (const auto& d : c.details) os << "         - " << d << "\n";
            }
    }
    os << "summary: modules " << result.reports.size() << ", verified " << verified
       << ", vacuous " << vacuous << ", falsified " << falsified << "\n";
    return os.str();
}

std::string render_catalog(bool json_output, const Bounds& bounds) {
    const auto names = catalog_names();
    if (json_output) {
        json j;
        j["schema"] = kReportSchema;
        j["kind"] = "catalog";
        json arr = json::array();
        for (const auto& name : names) {
            const FiniteModule m = catalog_module(name, bounds);
            json entry;
            entry["name"] = name;
            entry["ring_orders"] = m.ring().additive_orders();
            entry["module_orders"] = m.orders();
            entry["elements"] = m.size();
            arr.push_back(entry);
        }
        j["modules"] = arr;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "schema: " << kReportSchema << "\n";
    os << "catalog (" << names.size() << "):\n";
    for (const auto& name : names) {
        const FiniteModule m = catalog_module(name, bounds);
        os << "  " << name;
        for (std::size_t p = name.size(); p < 14; ++p) os << ' ';
        os << "ring " << m.ring().size() << " elements, module " << m.size()
           << " elements, orders [";
        for (std::size_t i = 0; i < m.orders().size(); ++i)
            os << (i ? "," : "") << m.orders()[i];
        os << "]\n";
    }
    return os.str();
}

std::string render_dot(const ModuleAnalysis& a) {
    std::ostringstream os;
    os << "digraph spectrum {\n";
    os << "  rankdir=BT;\n";
    for (auto p : a.points) os << "  \"" << a.label(p) << "\";\n";
    for (const auto& [lo, hi] : specialization_cover_edges(a))
        os << "  \"" << a.label(a.points[lo]) << "\" -> \"" << a.label(a.points[hi]) << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace fcspec
