#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wcifano/certify.hpp"
#include "wcifano/errors.hpp"
#include "wcifano/db.hpp"
#include "wcifano/falsifier.hpp"
#include "wcifano/isolating.hpp"
#include "wcifano/lxy.hpp"
#include "wcifano/monomial.hpp"
#include "wcifano/semigroup.hpp"
#include "wcifano/superrigid.hpp"
#include "wcifano/wps.hpp"

namespace py = pybind11;
using namespace wcifano;

namespace {

WCIShape make_shape(const std::vector<long long>& weights,
                    const std::vector<long long>& degrees) {
    return WCIShape{weights, degrees};
}

py::dict certify_to_dict(const CertifyResult& r) {
    py::dict d;
    d["family"] = r.family_no;
    d["class"] = r.computed_class;
    d["verdict"] = r.verdict;
    d["certified"] = r.ok;
    py::list checks;
    for (const auto& c : r.checks) {
        py::dict jc;
        jc["kind"] = c.kind;
        jc["subject"] = c.subject;
        jc["status"] = c.status;
        jc["detail"] = c.detail;
        jc["assumptions"] = c.assumptions;
        checks.append(jc);
    }
    d["checks"] = checks;
    d["open_points"] = r.open_points;
    d["anomalies"] = r.anomalies;
    return d;
}

} // namespace

PYBIND11_MODULE(_wcifano, m) {
    m.doc() =
        "exact numerical certificates for codimension-2 weighted "
        "complete-intersection Fano 3-folds";

    m.def(
        "anticanonical_degree",
        [](const std::vector<long long>& w, const std::vector<long long>& d) {
            return rat_str(anticanonical_degree(make_shape(w, d)));
        },
        py::arg("weights"), py::arg("degrees"),
        "A^3 as an exact fraction string");

    m.def(
        "compute_basket",
        [](const std::vector<long long>& w, const std::vector<long long>& d) {
            std::vector<std::tuple<long long, long long, int>> out;
            for (const auto& b : compute_basket(make_shape(w, d)))
                out.emplace_back(b.r, b.a, b.count);
            return out;
        },
        py::arg("weights"), py::arg("degrees"),
        "singular points as (r, a, count) triples, types 1/r(1,a,r-a)");

    m.def(
        "classify",
        [](const std::vector<long long>& w, const std::vector<long long>& d) {
            return classify_family(make_shape(w, d));
        },
        py::arg("weights"), py::arg("degrees"));

    m.def(
        "detect_distinguished",
        [](const std::vector<long long>& w, const std::vector<long long>& d) {
            std::vector<std::tuple<int, int, int, int, int>> out;
            for (const auto& c : detect_distinguished(make_shape(w, d)))
                out.emplace_back(c.k, c.j1, c.j2, c.i1, c.i2);
            return out;
        },
        py::arg("weights"), py::arg("degrees"),
        "(k, j1, j2, i1, i2) index tuples of the distinguished points");

    m.def("quasismooth_hypersurface", &quasismooth_hypersurface,
          py::arg("degree"), py::arg("weights"));

    m.def(
        "quasismooth_ci",
        [](const std::vector<long long>& w, const std::vector<long long>& d) {
            return quasismooth_ci_necessary(make_shape(w, d));
        },
        py::arg("weights"), py::arg("degrees"),
        "necessary quasi-smoothness conditions for the general member");

    m.def(
        "wellformed",
        [](const std::vector<long long>& w, const std::vector<long long>& d) {
            return wellformed(make_shape(w, d));
        },
        py::arg("weights"), py::arg("degrees"));

    m.def("semigroup_contains", &semigroup_contains, py::arg("a"),
          py::arg("b"), py::arg("x"));
    m.def("semigroup_min_multiple", &semigroup_min_multiple, py::arg("a0"),
          py::arg("a1"), py::arg("ai"));
    m.def(
        "monomials_of_degree",
        [](long long d, const std::vector<long long>& w) {
            return monomials_of_degree(d, w);
        },
        py::arg("degree"), py::arg("weights"));

    m.def("isolating_by_projection", &isolating_by_projection,
          py::arg("weights"), py::arg("j"));

    m.def(
        "load_and_certify",
        [](const std::string& path, int family) {
            Database db = load_db(path);
            const Family* f = find_family(db, family);
            if (!f)
                throw ParseError("family " + std::to_string(family) +
                                 " is not in the database");
            return certify_to_dict(certify_family(*f));
        },
        py::arg("db_path"), py::arg("family"),
        "run every recorded certificate of one family");

    m.def(
        "certify_all",
        [](const std::string& path) {
            Database db = load_db(path);
            py::list out;
            for (const auto& f : db.families)
                out.append(certify_to_dict(certify_family(f)));
            return out;
        },
        py::arg("db_path"));

    m.def(
        "lxy_mult",
        [](const std::string& path, int family, const std::string& point,
           const std::string& param) {
            Database db = load_db(path);
            const Family* f = find_family(db, family);
            if (!f)
                throw ParseError("family " + std::to_string(family) +
                                 " is not in the database");
            return lxy_mult_at(f->lxy, point, rat_parse(param));
        },
        py::arg("db_path"), py::arg("family"), py::arg("point"),
        py::arg("param") = "5",
        "multiplicity of the cover germ of L_xy at a coordinate point");

    m.def(
        "superrigid",
        [](const std::string& path, const std::string& septuple) {
            Database db = load_db(path);
            auto [d, weights] = parse_septuple(septuple);
            SuperrigidReport rep = superrigid_check(d, weights, db);
            py::dict out;
            out["d"] = rep.d;
            out["d_prime"] = rep.d_prime;
            out["family"] = rep.family_no;
            out["certified"] = rep.certified;
            out["notes"] = rep.notes;
            return out;
        },
        py::arg("db_path"), py::arg("septuple"));

    m.def(
        "validate_db",
        [](const std::string& path) { return validate_db(load_db(path)); },
        py::arg("db_path"),
        "list of violations; empty means every record recomputes");

    m.def(
        "falsify_quasismooth",
        [](const std::vector<long long>& w, const std::vector<long long>& d,
           std::uint64_t seed, int members) {
            auto rep = falsify_quasismooth(make_shape(w, d), seed, members);
            py::dict out;
            out["definite"] = rep.definite;
            out["members_checked"] = rep.members_checked;
            out["members_with_witness"] = rep.members_with_witness;
            out["witness"] = rep.witness;
            out["skipped"] = rep.skipped;
            return out;
        },
        py::arg("weights"), py::arg("degrees"), py::arg("seed") = 1,
        py::arg("members") = 3,
        "search random members over F_p for singular coordinate-stratum "
        "points");
}
