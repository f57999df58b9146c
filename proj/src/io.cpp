#include "suebk/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "suebk/errors.hpp"

namespace suebk {

using nlohmann::json;

namespace {

json coord_to_json(const Coord& c) { return json::array({c.row, c.col}); }

Coord coord_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw FileFormatError("coordinate must be a [row, col] integer pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

json plan_to_json_obj(const PlacementPlan& plan) {
    json j;
    j["kind"] = plan.kind;
    j["d"] = plan.d;
    j["dprime"] = plan.dprime;
    j["k"] = plan.k;
    j["active"] = json::array({plan.active_rows, plan.active_cols});
    j["offset"] = json::array({plan.offset_row, plan.offset_col});
    json del = json::array();
    for (const Coord& c : plan.deleted) del.push_back(coord_to_json(c));
    j["deleted"] = del;
    json blocks = json::array();
    for (const PlanBlock& b : plan.blocks) {
        json jb;
        jb["weighing"] = b.weighing_id;
        json cells = json::array();
        for (const Coord& c : b.coords.coords) cells.push_back(coord_to_json(c));
        jb["coords"] = cells;
        blocks.push_back(jb);
    }
    j["blocks"] = blocks;
    if (plan.split) j["split"] = json::array({plan.split->first, plan.split->second});
    return j;
}

}  // namespace

std::string state_set_to_json(const SuebkSet& set) {
    json j;
    j["d"] = set.d;
    j["dprime"] = set.dprime;
    j["k"] = set.k;
    j["N"] = set.n();
    json states = json::array();
    for (const auto& m : set.matrices) {
        json entries = json::array();
        for (const Cplx& z : m.entries()) entries.push_back(json::array({z.real(), z.imag()}));
        states.push_back(entries);
    }
    j["states"] = states;
    json meta;
    meta["construction"] = set.provenance;
    if (set.plan) meta["plan"] = plan_to_json_obj(*set.plan);
    j["metadata"] = meta;
    return j.dump(1) + "\n";
}

SuebkSet state_set_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FileFormatError(std::string("invalid JSON: ") + e.what());
    }
    SuebkSet set;
    try {
        set.d = j.at("d").get<int>();
        set.dprime = j.at("dprime").get<int>();
        set.k = j.at("k").get<int>();
        const long long n = j.at("N").get<long long>();
        const auto& states = j.at("states");
        if (!states.is_array() || static_cast<long long>(states.size()) != n)
            throw FileFormatError("N does not match the number of states");
        if (set.d < 2 || set.dprime < 2) throw FileFormatError("need d, d' >= 2");
        if (set.k < 2 || set.k > std::min(set.d, set.dprime))
            throw FileFormatError("k outside [2, min(d,d')]");
        if (n < 1 || n > static_cast<long long>(set.d) * set.dprime - 1)
            throw FileFormatError("N outside [1, dd'-1]");
        const size_t dim = static_cast<size_t>(set.d) * set.dprime;
        for (const auto& js : states) {
            if (!js.is_array() || js.size() != dim)
                throw FileFormatError("each state needs exactly d*d' entries");
            ComplexMatrix m(set.d, set.dprime);
            for (size_t i = 0; i < dim; ++i) {
                const auto& pair = js[i];
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                    !pair[1].is_number())
                    throw FileFormatError("entries must be [re, im] pairs");
                m.entries()[i] = Cplx{pair[0].get<double>(), pair[1].get<double>()};
            }
            set.matrices.push_back(std::move(m));
        }
        set.provenance = "external";
        if (j.contains("metadata") && j["metadata"].contains("construction"))
            set.provenance = j["metadata"]["construction"].get<std::string>();
    } catch (const json::exception& e) {
        throw FileFormatError(std::string("malformed state-set file: ") + e.what());
    }
    return set;
}

void write_state_set(const std::string& path, const SuebkSet& set) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << state_set_to_json(set);
}

SuebkSet read_state_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileFormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return state_set_from_json(buf.str());
}

std::string plan_spec_to_json(const PlacementPlan& plan) {
    return plan_to_json_obj(plan).dump(1) + "\n";
}

PlanFile plan_file_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FileFormatError(std::string("invalid JSON: ") + e.what());
    }
    PlanFile pf;
    try {
        pf.d = j.at("d").get<int>();
        pf.dprime = j.at("dprime").get<int>();
        pf.k = j.at("k").get<int>();
        const auto& act = j.at("active");
        pf.active_rows = act.at(0).get<int>();
        pf.active_cols = act.at(1).get<int>();
        if (j.contains("deleted"))
            for (const auto& jc : j["deleted"]) pf.deleted.push_back(coord_from_json(jc));
        for (const auto& jb : j.at("blocks")) {
            BlockSpec spec;
            spec.weighing_id = jb.at("weighing").get<std::string>();
            if (jb.contains("count")) spec.count = jb["count"].get<int>();
            if (jb.contains("coords"))
                for (const auto& jc : jb["coords"]) spec.coords.push_back(coord_from_json(jc));
            pf.blocks.push_back(std::move(spec));
        }
    } catch (const json::exception& e) {
        throw FileFormatError(std::string("malformed plan file: ") + e.what());
    }
    return pf;
}

PlanFile read_plan_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileFormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return plan_file_from_json(buf.str());
}

WeighingMatrix resolve_weighing(const std::string& id, const Catalog& catalog) {
    if (id.size() > 2 && id.rfind("CH", 0) == 0) {
        try {
            size_t used = 0;
            const int d = std::stoi(id.substr(2), &used);
            if (used == id.size() - 2 && d >= 2) return fourier_matrix(d);
        } catch (const std::exception&) {
        }
    }
    if (id.size() > 3 && id.front() == 'W' && id[1] == '(' && id.back() == ')') {
        int n = 0, k = 0, a = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(id.substr(2, id.size() - 3));
        if ((in >> n >> c1 >> k >> c2 >> a) && c1 == ',' && c2 == ',') {
            if (auto w = catalog.lookup_exact(n, k, a)) return *w;
            throw IngredientMissing("weighing matrix " + id + " not in the catalog");
        }
    }
    for (const auto& w : catalog.list())
        if (w.name() == id) return w;
    throw IngredientMissing("unknown weighing matrix id '" + id + "'");
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

std::string report_to_json(const VerificationReport& rep) {
    json j;
    j["verdict"] = to_string(rep.verdict);
    j["eps"] = rep.eps;
    j["orthonormality"] = {{"max_deviation", rep.ortho_max_dev}, {"pass", rep.ortho_pass}};
    j["sesk_failures"] = rep.sesk_failures;
    json comp;
    comp["dimension"] = rep.complement.dimension;
    comp["coordinate_supported"] = rep.complement.coordinate_supported;
    comp["offdiag_max"] = rep.complement.offdiag_max;
    comp["reorth_deviation"] = rep.complement.reorth_deviation;
    if (rep.complement.coordinate_supported) {
        json support = json::array();
        for (const Coord& c : rep.complement.support) support.push_back(coord_to_json(c));
        comp["support"] = support;
        const MatchingResult& m = *rep.complement.matching;
        comp["max_matching"] = m.size;
        json matched = json::array();
        for (const Coord& c : m.matched) matched.push_back(coord_to_json(c));
        comp["matching"] = matched;
        comp["cover_rows"] = m.cover_rows;
        comp["cover_cols"] = m.cover_cols;
    }
    j["complement"] = comp;
    if (rep.witness) {
        json entries = json::array();
        for (const Cplx& z : rep.witness->entries())
            entries.push_back(json::array({z.real(), z.imag()}));
        j["witness"] = entries;
    }
    j["notes"] = rep.notes;
    return j.dump(1) + "\n";
}

void print_report(std::ostream& out, const VerificationReport& rep) {
    out << "verdict: " << to_string(rep.verdict) << "\n";
    out << "orthonormality: max deviation " << rep.ortho_max_dev << " -> "
        << (rep.ortho_pass ? "pass" : "FAIL") << "\n";
    if (rep.sesk_failures.empty()) {
        out << "SESk membership: all states pass\n";
    } else {
        out << "SESk membership: " << rep.sesk_failures.size() << " state(s) FAIL (indices";
        for (int i : rep.sesk_failures) out << ' ' << i;
        out << ")\n";
    }
    out << "complement: dimension " << rep.complement.dimension;
    if (rep.complement.coordinate_supported) {
        out << ", coordinate-supported on {";
        for (size_t i = 0; i < rep.complement.support.size(); ++i) {
            if (i) out << ", ";
            out << to_string(rep.complement.support[i]);
        }
        out << "}, max matching " << rep.complement.matching->size;
        out << " (cover: " << rep.complement.matching->cover_rows.size() << " row(s) + "
            << rep.complement.matching->cover_cols.size() << " column(s))";
    } else {
        out << ", not coordinate-supported (max off-diagonal "
            << rep.complement.offdiag_max << ")";
    }
    out << "\n";
    for (const std::string& note : rep.notes) out << "note: " << note << "\n";
}

}  // namespace suebk
