/* Python bindings for the main operations: tower description, Boseck
 * invariants, the decomposition table, Weierstrass gaps, numerical
 * semigroups, and the explicit-curve oracle.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cycdiff/boseck.hpp"
#include "cycdiff/config.hpp"
#include "cycdiff/decomp.hpp"
#include "cycdiff/oracle.hpp"
#include "cycdiff/sweep.hpp"
#include "cycdiff/weier.hpp"

#include <sstream>

namespace py = pybind11;
using namespace cycdiff;

namespace {

std::map<std::pair<long long, long long>, long long> table_dict(const DecompositionTable& t) {
    std::map<std::pair<long long, long long>, long long> out;
    for (const auto& [label, d] : t.mult) out[{label.lambda, label.k}] = d;
    return out;
}

}  // namespace

PYBIND11_MODULE(cycdiff, m) {
    m.doc() = "Decomposition of holomorphic differentials under a cyclic "
              "group of order n*p^ell, Boseck invariants, and Weierstrass gaps";

    py::register_exception<ValidationError>(m, "TowerValidationError");
    py::register_exception<InternalError>(m, "InternalInconsistencyError");

    py::class_<GroupSpec>(m, "GroupSpec")
        .def(py::init([](long long p, int ell, long long n, long long kummer_exponent) {
                 return GroupSpec{p, ell, n, kummer_exponent};
             }),
             py::arg("p"), py::arg("ell"), py::arg("n"), py::arg("kummer_exponent") = 1)
        .def_readwrite("p", &GroupSpec::p)
        .def_readwrite("ell", &GroupSpec::ell)
        .def_readwrite("n", &GroupSpec::n)
        .def_readwrite("kummer_exponent", &GroupSpec::kummer_exponent)
        .def_property_readonly("order", &GroupSpec::order);

    py::class_<WildData>(m, "WildData")
        .def(py::init([](std::vector<long long> jumps, int epsilon, long long delta) {
                 return WildData{std::move(jumps), epsilon, delta};
             }),
             py::arg("jumps"), py::arg("epsilon"), py::arg("delta"))
        .def_readwrite("jumps", &WildData::jumps)
        .def_readwrite("epsilon", &WildData::epsilon)
        .def_readwrite("delta", &WildData::delta)
        .def_static("delta_for_single_jump", &WildData::delta_for_single_jump);

    py::class_<BranchPoint>(m, "BranchPoint")
        .def(py::init([](std::string id, long long tame_phi, std::optional<WildData> wild) {
                 return BranchPoint{std::move(id), tame_phi, std::move(wild)};
             }),
             py::arg("id"), py::arg("tame_phi") = 0,
             py::arg("wild") = std::optional<WildData>{})
        .def_readwrite("id", &BranchPoint::id)
        .def_readwrite("tame_phi", &BranchPoint::tame_phi)
        .def_readwrite("wild", &BranchPoint::wild);

    py::class_<TowerData>(m, "TowerData")
        .def(py::init([](GroupSpec group, long long base_genus,
                         std::vector<BranchPoint> branch_points,
                         std::optional<long long> genus_ErT) {
                 TowerData t;
                 t.group = group;
                 t.base_genus = base_genus;
                 t.branch_points = std::move(branch_points);
                 t.genus_ErT = genus_ErT;
                 return t;
             }),
             py::arg("group"), py::arg("base_genus") = 0,
             py::arg("branch_points") = std::vector<BranchPoint>{},
             py::arg("genus_ErT") = std::optional<long long>{})
        .def_readwrite("group", &TowerData::group)
        .def_readwrite("base_genus", &TowerData::base_genus)
        .def_readwrite("branch_points", &TowerData::branch_points)
        .def_readwrite("genus_ErT", &TowerData::genus_ErT);

    m.def("validate", [](const TowerData& t) {
        auto rep = validate(t);
        return py::make_tuple(rep.errors, rep.warnings);
    });
    m.def("genus_fp", &genus_FP);
    m.def("genus_f", &genus_F);
    m.def("wild_defect", &wild_defect);

    m.def("gamma_matrix", [](const TowerData& t) {
        BoseckContext ctx(t);
        std::vector<std::vector<long long>> rows;
        for (long long k = 0; k <= ctx.p_ell(); ++k) {
            std::vector<long long> row;
            for (long long lambda = 0; lambda < ctx.n(); ++lambda)
                row.push_back(ctx.gamma(k, lambda));
            rows.push_back(row);
        }
        return rows;
    }, "Gamma_{k,lambda} for k = 0..p^ell (rows) and lambda = 0..n-1 (columns)");

    m.def("decompose", [](const TowerData& t) { return table_dict(decompose(t)); },
          "multiplicities d(lambda,k) as a dict {(lambda,k): d}");
    m.def("d_star", [](const TowerData& t) { return table_dict(d_star_table(t)); },
          "tame/unramified specialization d*(lambda,k)");
    m.def("c_table", [](const TowerData& t) {
        BoseckContext ctx(t);
        std::map<std::pair<long long, long long>, long long> out;
        for (long long lambda = 0; lambda < ctx.n(); ++lambda)
            for (long long k = 0; k < ctx.p_ell(); ++k)
                out[{lambda, k}] = c_value(ctx, lambda, k);
        return out;
    });

    m.def("gap_classes", [](const TowerData& t, size_t branch_index) {
        BoseckContext ctx(t);
        return gap_classes(ctx, branch_index).classes;
    }, py::arg("tower"), py::arg("branch_index"));
    m.def("full_gaps", [](const TowerData& t, size_t branch_index) {
        BoseckContext ctx(t);
        return full_gaps(ctx, branch_index);
    }, py::arg("tower"), py::arg("branch_index"));
    m.def("small_gaps", [](const TowerData& t, size_t branch_index) {
        BoseckContext ctx(t);
        auto s = small_gaps(ctx, branch_index);
        return std::vector<long long>(s.begin(), s.end());
    }, py::arg("tower"), py::arg("branch_index"));

    m.def("semigroup_gaps", &semigroup_gaps, py::arg("generators"), py::arg("bound") = 0);
    m.def("descriptors", [](const std::vector<long long>& gaps, long long d) {
        std::vector<std::tuple<long long, long long, long long>> out;
        for (const auto& row : descriptors(gaps, d).rows)
            out.emplace_back(row.i, row.b_i, row.nu_i);
        return out;
    }, py::arg("gaps"), py::arg("d"), "rows (i, b_i, nu_i) for i = 1..d-1");

    py::class_<CurveSpec>(m, "CurveSpec")
        .def(py::init([](GroupSpec group, long long q,
                         std::vector<std::pair<long long, long long>> b_roots,
                         std::vector<std::tuple<long long, long long, long long>> f_terms) {
                 CurveSpec spec;
                 spec.group = group;
                 spec.q = q;
                 for (auto& [beta, phi] : b_roots) spec.b_factored.push_back({beta, phi});
                 for (auto& [alpha, mm, c] : f_terms) spec.f_partial.push_back({alpha, mm, c});
                 return spec;
             }),
             py::arg("group"), py::arg("q"),
             py::arg("b_roots") = std::vector<std::pair<long long, long long>>{},
             py::arg("f_terms") = std::vector<std::tuple<long long, long long, long long>>{})
        .def_readwrite("group", &CurveSpec::group)
        .def_readwrite("q", &CurveSpec::q);

    m.def("derive_tower", &derive_tower);

    py::class_<OracleReport>(m, "OracleReport")
        .def_property_readonly("ok", &OracleReport::pass)
        .def_readonly("genus_formula", &OracleReport::genus_formula)
        .def_readonly("dim_basis", &OracleReport::dim_basis)
        .def_readonly("oracle_gaps", &OracleReport::oracle_gaps)
        .def_readonly("failures", &OracleReport::failures)
        .def_property_readonly("d_oracle", [](const OracleReport& r) {
            std::map<std::pair<long long, long long>, long long> out;
            for (const auto& [l, d] : r.d_oracle) out[{l.lambda, l.k}] = d;
            return out;
        })
        .def("__str__", &OracleReport::to_text);

    m.def("verify", [](const CurveSpec& spec) { return verify_curve(spec); },
          "run the brute-force oracle against the closed-form engines");

    m.def("sweep", [](unsigned long long seed, long long count) {
        SweepResult r = run_sweep(seed, count, CurveSweepParams{});
        return py::make_tuple(r.passed, r.failed);
    }, py::arg("seed") = 42, py::arg("count") = 20,
       "(passed, failed) over randomized curve instances");

    m.def("parse_config", [](const std::string& text) {
        std::istringstream in(text);
        Config cfg = parse_config(in);
        return cfg.effective_tower();
    }, "tower described by an INI-style configuration string");
}
