#include "wcifano/db.hpp"
#include "wcifano/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace wcifano {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
    throw SchemaError(where + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        schema_fail(where, std::string("missing field '") + key + "'");
    return j.at(key);
}

long long need_int(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_integer())
        schema_fail(where, std::string("field '") + key + "' must be an integer");
    return v.get<long long>();
}

std::string need_str(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_string())
        schema_fail(where, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<long long> need_int_array(const json& j, const char* key,
                                      const std::string& where, int len = -1) {
    const json& v = need(j, key, where);
    if (!v.is_array())
        schema_fail(where, std::string("field '") + key + "' must be an array");
    std::vector<long long> out;
    for (const auto& e : v) {
        if (!e.is_number_integer())
            schema_fail(where, std::string("field '") + key + "' must hold integers");
        out.push_back(e.get<long long>());
    }
    if (len >= 0 && static_cast<int>(out.size()) != len)
        schema_fail(where, std::string("field '") + key + "' has wrong length");
    return out;
}

std::vector<std::string> need_str_array(const json& j, const char* key,
                                        const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_array())
        schema_fail(where, std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string())
            schema_fail(where, std::string("field '") + key + "' must hold strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<LxyTerm> parse_terms(const json& arr, const std::string& where) {
    if (!arr.is_array())
        schema_fail(where, "must be an array of terms");
    std::vector<LxyTerm> out;
    for (const auto& t : arr) {
        LxyTerm term;
        std::string c = need_str(t, "coeff", where);
        if (c.rfind("param:", 0) == 0) {
            term.param = c.substr(6);
            if (term.param.empty())
                schema_fail(where, "empty parameter name");
        } else {
            term.coeff = rat_parse(c);
        }
        auto e = need_int_array(t, "exp", where, 4);
        for (int i = 0; i < 4; ++i)
            term.exp[static_cast<size_t>(i)] = static_cast<int>(e[static_cast<size_t>(i)]);
        out.push_back(term);
    }
    return out;
}

Family parse_family(const json& jf) {
    Family f;
    if (!jf.is_object() || !jf.contains("no") || !jf.at("no").is_number_integer())
        throw SchemaError("family record: missing integer field 'no'");
    f.no = jf.at("no").get<int>();
    std::string where = "family " + std::to_string(f.no);
    f.weights = need_int_array(jf, "weights", where, 6);
    f.degrees = need_int_array(jf, "degrees", where, 2);
    f.A3 = rat_parse(need_str(jf, "A3", where));
    f.klass = need_str(jf, "class", where);
    if (f.klass != "F(i)" && f.klass != "F(ii)")
        schema_fail(where, "field 'class' must be F(i) or F(ii)");
    f.expected_verdict = need_str(jf, "expected_verdict", where);
    if (f.expected_verdict != "lct_equals_1" &&
        f.expected_verdict != "lct_on_Xcirc_equals_1")
        schema_fail(where, "field 'expected_verdict' has an unknown value");

    for (const auto& jb : need(jf, "basket", where)) {
        BasketEntry b;
        b.r = need_int(jb, "r", where + " basket");
        b.a = need_int(jb, "a", where + " basket");
        b.count = static_cast<int>(need_int(jb, "count", where + " basket"));
        b.marks = need_str_array(jb, "marks", where + " basket");
        for (const auto& m : b.marks)
            if (m != "QI" && m != "EI" && m != "d")
                schema_fail(where + " basket", "unknown mark '" + m + "'");
        if (b.r < 2 || b.a < 1 || b.a >= b.r || b.count < 1)
            schema_fail(where + " basket", "entry is not a valid quotient type");
        f.basket.push_back(b);
    }

    for (const auto& js : need(jf, "strata", where)) {
        StratumEntry e;
        std::string sw = where + " stratum";
        e.id = need_str(js, "id", sw);
        sw = where + " stratum '" + e.id + "'";
        e.lemma = need_str(js, "lemma", sw);
        e.l = need_int(js, "l", sw);
        e.c = need_int(js, "c", sw);
        if (js.contains("curve")) {
            const json& jc = js.at("curve");
            CurveData cd;
            long long dn = need_int(jc, "d_num", sw);
            long long dd = need_int(jc, "d_den", sw);
            if (dd <= 0)
                schema_fail(sw, "curve degree denominator must be positive");
            cd.d = Rational(Int(dn), Int(dd));
            cd.m = static_cast<int>(need_int(jc, "m", sw));
            cd.formula = need_str(jc, "formula", sw);
            e.curve = cd;
        }
        const json& jr = need(js, "recipe", sw);
        e.recipe.kind = need_str(jr, "kind", sw);
        if (e.recipe.kind == "projection") {
            e.recipe.j = static_cast<int>(need_int(jr, "j", sw));
        } else if (e.recipe.kind == "structured") {
            for (long long v : need_int_array(jr, "order", sw))
                e.recipe.order.push_back(static_cast<int>(v));
            for (long long v : need_int_array(jr, "mask", sw))
                e.recipe.mask.push_back(static_cast<int>(v));
            if (e.recipe.order.size() != e.recipe.mask.size())
                schema_fail(sw, "recipe order/mask length mismatch");
        } else if (e.recipe.kind != "recorded") {
            schema_fail(sw, "unknown recipe kind '" + e.recipe.kind + "'");
        }
        e.assume = need_str_array(js, "assume", sw);
        f.strata.push_back(e);
    }

    const json& jl = need(jf, "lxy", where);
    std::string lw = where + " lxy";
    f.lxy.vars = need_str_array(jl, "vars", lw);
    f.lxy.g1 = parse_terms(need(jl, "g1", lw), lw + " g1");
    f.lxy.g2 = parse_terms(need(jl, "g2", lw), lw + " g2");
    f.lxy.sing = need_str_array(jl, "sing", lw);
    f.lxy.witness = need_str(jl, "witness", lw);
    f.lxy.conds = need_str_array(jl, "conds", lw);
    for (const auto& jm : need(jl, "forced", lw)) {
        ForcedMonomial fm;
        fm.eq = static_cast<int>(need_int(jm, "eq", lw + " forced"));
        auto e = need_int_array(jm, "exp", lw + " forced", 4);
        for (int i = 0; i < 4; ++i)
            fm.exp[static_cast<size_t>(i)] = static_cast<int>(e[static_cast<size_t>(i)]);
        f.lxy.forced.push_back(fm);
    }

    for (const auto& jd : need(jf, "distinguished", where)) {
        DistinguishedConfig c;
        std::string dw = where + " distinguished";
        c.k = static_cast<int>(need_int(jd, "k", dw));
        c.j1 = static_cast<int>(need_int(jd, "j1", dw));
        c.j2 = static_cast<int>(need_int(jd, "j2", dw));
        c.i1 = static_cast<int>(need_int(jd, "i1", dw));
        c.i2 = static_cast<int>(need_int(jd, "i2", dw));
        for (int v : {c.k, c.j1, c.j2, c.i1, c.i2})
            if (v < 1 || v > 5)
                schema_fail(dw, "indices must lie in 1..5");
        f.distinguished.push_back(c);
    }

    for (const auto& jq : need(jf, "qiei_points", where)) {
        QieiPoint q;
        std::string qw = where + " qiei_points";
        q.r = need_int(jq, "r", qw);
        q.a = need_int(jq, "a", qw);
        q.point = need_str(jq, "point", qw);
        f.qiei_points.push_back(q);
    }

    f.assumptions = need_str_array(jf, "assumptions", where);
    return f;
}

void crossref_checks(const Family& f) {
    std::string where = "family " + std::to_string(f.no);
    // distinguished configurations vs d-marked basket entries
    std::map<std::pair<long long, long long>, int> cfg_types;
    for (const auto& c : f.distinguished) {
        long long ak = f.weights[static_cast<size_t>(c.k)];
        auto t = normalize_quotient_type(
            ak, {1, f.weights[static_cast<size_t>(c.i1)],
                 f.weights[static_cast<size_t>(c.i2)]});
        cfg_types[t] += 1;
    }
    std::map<std::pair<long long, long long>, int> d_marks;
    for (const auto& b : f.basket) {
        if (std::find(b.marks.begin(), b.marks.end(), "d") != b.marks.end())
            d_marks[{b.r, b.a}] = b.count;
    }
    if (cfg_types != d_marks)
        throw CrossRefError(where +
                            ": distinguished configurations do not match the "
                            "d-marked basket entries");
    // QI/EI points vs basket marks
    std::set<std::pair<long long, long long>> qiei_marked;
    for (const auto& b : f.basket)
        for (const auto& m : b.marks)
            if (m == "QI" || m == "EI")
                qiei_marked.insert({b.r, b.a});
    std::set<std::pair<long long, long long>> qiei_listed;
    for (const auto& q : f.qiei_points) {
        lxy_point_index(q.point);
        qiei_listed.insert({q.r, q.a});
    }
    if (qiei_marked != qiei_listed)
        throw CrossRefError(where +
                            ": qiei_points do not match the QI/EI-marked "
                            "basket entries");
}

Database parse_db(const json& j) {
    Database db;
    db.version = need_str(j, "version", "database");
    const json& fams = need(j, "families", "database");
    if (!fams.is_array())
        throw SchemaError("database: field 'families' must be an array");
    std::set<int> seen;
    for (const auto& jf : fams) {
        Family f = parse_family(jf);
        if (!seen.insert(f.no).second)
            throw SchemaError("database: duplicate family number " +
                              std::to_string(f.no));
        crossref_checks(f);
        db.families.push_back(std::move(f));
    }
    std::sort(db.families.begin(), db.families.end(),
              [](const Family& a, const Family& b) { return a.no < b.no; });
    return db;
}

} // namespace

Database load_db_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("database JSON parse failure: ") + e.what());
    }
    return parse_db(j);
}

Database load_db(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open database file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_db_string(ss.str());
}

std::string serialize_db(const Database& db) {
    ojson j;
    j["version"] = db.version;
    j["families"] = ojson::array();
    for (const auto& f : db.families) {
        ojson jf;
        jf["no"] = f.no;
        jf["weights"] = f.weights;
        jf["degrees"] = f.degrees;
        jf["A3"] = rat_str(f.A3);
        jf["class"] = f.klass;
        jf["expected_verdict"] = f.expected_verdict;
        jf["basket"] = ojson::array();
        for (const auto& b : f.basket) {
            ojson jb;
            jb["r"] = b.r;
            jb["a"] = b.a;
            jb["count"] = b.count;
            jb["marks"] = b.marks;
            jf["basket"].push_back(jb);
        }
        jf["strata"] = ojson::array();
        for (const auto& e : f.strata) {
            ojson js;
            js["id"] = e.id;
            js["lemma"] = e.lemma;
            js["l"] = e.l;
            js["c"] = e.c;
            if (e.curve) {
                ojson jc;
                jc["d_num"] = numer(e.curve->d).convert_to<long long>();
                jc["d_den"] = denom(e.curve->d).convert_to<long long>();
                jc["m"] = e.curve->m;
                jc["formula"] = e.curve->formula;
                js["curve"] = jc;
            }
            ojson jr;
            jr["kind"] = e.recipe.kind;
            if (e.recipe.kind == "projection")
                jr["j"] = e.recipe.j;
            if (e.recipe.kind == "structured") {
                jr["order"] = e.recipe.order;
                jr["mask"] = e.recipe.mask;
            }
            js["recipe"] = jr;
            js["assume"] = e.assume;
            jf["strata"].push_back(js);
        }
        ojson jl;
        jl["vars"] = f.lxy.vars;
        auto dump_terms = [](const std::vector<LxyTerm>& terms) {
            ojson arr = ojson::array();
            for (const auto& t : terms) {
                ojson jt;
                jt["coeff"] = t.param.empty() ? rat_str(t.coeff) : "param:" + t.param;
                jt["exp"] = t.exp;
                arr.push_back(jt);
            }
            return arr;
        };
        jl["g1"] = dump_terms(f.lxy.g1);
        jl["g2"] = dump_terms(f.lxy.g2);
        jl["sing"] = f.lxy.sing;
        jl["witness"] = f.lxy.witness;
        jl["conds"] = f.lxy.conds;
        jl["forced"] = ojson::array();
        for (const auto& fm : f.lxy.forced) {
            ojson jm;
            jm["eq"] = fm.eq;
            jm["exp"] = fm.exp;
            jl["forced"].push_back(jm);
        }
        jf["lxy"] = jl;
        jf["distinguished"] = ojson::array();
        for (const auto& c : f.distinguished) {
            ojson jd;
            jd["k"] = c.k;
            jd["j1"] = c.j1;
            jd["j2"] = c.j2;
            jd["i1"] = c.i1;
            jd["i2"] = c.i2;
            jf["distinguished"].push_back(jd);
        }
        jf["qiei_points"] = ojson::array();
        for (const auto& q : f.qiei_points) {
            ojson jq;
            jq["r"] = q.r;
            jq["a"] = q.a;
            jq["point"] = q.point;
            jf["qiei_points"].push_back(jq);
        }
        jf["assumptions"] = f.assumptions;
        j["families"].push_back(jf);
    }
    return j.dump(1) + "\n";
}

const Family* find_family(const Database& db, int no) {
    for (const auto& f : db.families)
        if (f.no == no)
            return &f;
    return nullptr;
}

std::vector<std::string> validate_db(const Database& db) {
    std::vector<std::string> bad;
    for (const auto& f : db.families) {
        std::string where = "family " + std::to_string(f.no) + ": ";
        WCIShape s = f.shape();
        if (!index_check(s))
            bad.push_back(where + "Fano index is not 1");
        if (!wellformed(s))
            bad.push_back(where + "not well formed");
        if (!quasismooth_ci_necessary(s))
            bad.push_back(where + "general member fails quasi-smoothness conditions");
        if (anticanonical_degree(s) != f.A3)
            bad.push_back(where + "recorded A3 does not match d1*d2/prod(a_i)");
        try {
            auto computed = compute_basket(s);
            std::vector<ComputedBasketEntry> recorded;
            for (const auto& b : f.basket)
                recorded.push_back({b.r, b.a, b.count});
            auto key = [](const ComputedBasketEntry& e) {
                return std::make_tuple(e.r, e.a, e.count);
            };
            std::sort(recorded.begin(), recorded.end(),
                      [&](auto& x, auto& y) { return key(x) < key(y); });
            std::sort(computed.begin(), computed.end(),
                      [&](auto& x, auto& y) { return key(x) < key(y); });
            bool eq = computed.size() == recorded.size();
            for (size_t i = 0; eq && i < computed.size(); ++i)
                eq = key(computed[i]) == key(recorded[i]);
            if (!eq)
                bad.push_back(where + "recorded basket does not match recomputation");
        } catch (const Error& e) {
            bad.push_back(where + "basket recomputation failed: " + e.what());
        }
        if (classify_family(s) != f.klass)
            bad.push_back(where + "recorded class does not match recomputation");
        auto cfgs = detect_distinguished(s);
        auto cfg_key = [](const DistinguishedConfig& c) {
            return std::make_tuple(c.k, c.j1, c.j2, c.i1, c.i2);
        };
        std::vector<DistinguishedConfig> rec = f.distinguished, comp = cfgs;
        std::sort(rec.begin(), rec.end(),
                  [&](auto& x, auto& y) { return cfg_key(x) < cfg_key(y); });
        std::sort(comp.begin(), comp.end(),
                  [&](auto& x, auto& y) { return cfg_key(x) < cfg_key(y); });
        bool eq = rec.size() == comp.size();
        for (size_t i = 0; eq && i < rec.size(); ++i)
            eq = cfg_key(rec[i]) == cfg_key(comp[i]);
        if (!eq)
            bad.push_back(where +
                          "recorded distinguished configurations do not match "
                          "detection");
        for (const auto& e : f.strata) {
            try {
                for (const auto& v : verify_stratum_entry(s, e))
                    bad.push_back(where + v);
            } catch (const Error& err) {
                bad.push_back(where + err.what());
            }
        }
        try {
            lxy_validate(f.lxy, f.weights, f.degrees, f.no);
        } catch (const Error& err) {
            bad.push_back(std::string(err.what()));
        }
    }
    return bad;
}

std::string resolve_db_path(const std::string& flag_value) {
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("WCIFANO_DB"); env && *env)
        return env;
    return "./data/families.json";
}

} // namespace wcifano
