#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "simcore/bar_partition.hpp"
#include "simcore/core_quotient.hpp"
#include "simcore/encodings.hpp"
#include "simcore/lattice.hpp"
#include "simcore/oracle.hpp"
#include "simcore/partition.hpp"
#include "simcore/series.hpp"
#include "simcore/verify.hpp"

namespace py = pybind11;
using namespace simcore;

namespace {

using Parts = std::vector<int>;

py::int_ to_py(const BigInt& x) {
    const auto text = x.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& x) { return BigInt(py::str(x).cast<std::string>()); }

py::list to_py(const std::vector<BigInt>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(to_py(x));
    return out;
}

std::vector<Parts> parts_of(const std::vector<Partition>& ps) {
    std::vector<Parts> out;
    for (const auto& p : ps) out.push_back(p.parts());
    return out;
}

py::dict tower_dict(const StraightTower& t) {
    py::dict d;
    d["g"] = t.g;
    d["core"] = t.core.parts();
    d["quotient"] = parts_of(t.quotient);
    d["weight"] = t.weight;
    return d;
}

py::dict tower_dict(const BarTower& t) {
    py::dict d;
    d["g"] = t.g;
    d["core"] = t.core.parts();
    d["bar_component"] = t.bar_component.parts();
    d["quotient"] = parts_of(t.quotient);
    d["weight"] = t.weight;
    return d;
}

std::vector<std::vector<std::int64_t>> grid_rows(const SignedGrid& g) {
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 1; i <= g.rows(); ++i) {
        auto& row = rows.emplace_back();
        for (int j = 1; j <= g.cols(); ++j) row.push_back(g.value(i, j));
    }
    return rows;
}

TruncatedSeries series_of(const std::string& gf, int s, int t, int N) {
    if (gf == "partition") return partition_gf(N);
    if (gf == "core") return core_gf(t, N);
    if (gf == "selfconj-core") return selfconj_core_gf(t, N);
    if (gf == "barcore") return barcore_gf(t, N);
    if (gf == "psi") return psi_st_gf(s, t, N);
    if (gf == "psi-star") return psi_star_st_gf(s, t, N);
    if (gf == "psi-bar") return psi_bar_st_gf(s, t, N);
    throw std::invalid_argument("unknown generating function: " + gf);
}

oracle::CountTable count_table(const std::string& quantity, int s, int t, int N) {
    if (quantity == "cores") return oracle::core_counts(t, N);
    if (quantity == "selfconj-cores") return oracle::selfconj_core_counts(t, N);
    if (quantity == "barcores") return oracle::barcore_counts(t, N);
    if (quantity == "st-cores") return oracle::st_core_counts(s, t, N);
    if (quantity == "selfconj-st-cores") return oracle::selfconj_st_core_counts(s, t, N);
    if (quantity == "stbar-cores") return oracle::stbar_core_counts(s, t, N);
    throw std::invalid_argument("unknown quantity: " + quantity);
}

}  // namespace

PYBIND11_MODULE(_simcore, m) {
    m.doc() = "Simultaneous core partitions: hooks, quotients, lattice bijections and generating functions";

    m.def("hook_lengths", [](const Parts& p) { return hook_length_multiset(Partition(p)); });
    m.def("first_column_hooks", [](const Parts& p) { return first_column_hooks(Partition(p)).values(); });
    m.def("from_first_column_hooks", [](const Parts& b) { return from_first_column_hooks(BetaSet(b)).parts(); });
    m.def("conjugate", [](const Parts& p) { return conjugate(Partition(p)).parts(); });
    m.def("diagonal_hooks", [](const Parts& p) { return diagonal_hooks(Partition(p)); });
    m.def("from_diagonal_hooks", [](const Parts& d) { return from_diagonal_hooks(d).parts(); });
    m.def("is_t_core", [](const Parts& p, int t) { return is_t_core(Partition(p), t); });
    m.def("bar_lengths", [](const Parts& b) { return bar_length_multiset(BarPartition(b)); });
    m.def("is_tbar_core", [](const Parts& b, int t) { return is_tbar_core(BarPartition(b), t); });

    m.def("decompose", [](const Parts& p, int g) { return tower_dict(decompose(Partition(p), g)); });
    m.def(
        "reconstruct",
        [](const Parts& core, const std::vector<Parts>& quotient) {
            StraightTower tower{static_cast<int>(quotient.size()), Partition(core), {}, 0};
            for (const auto& q : quotient) {
                tower.quotient.emplace_back(q);
                tower.weight += tower.quotient.back().size();
            }
            return reconstruct(tower).parts();
        },
        py::arg("core"), py::arg("quotient"));
    m.def("bar_decompose", [](const Parts& b, int g) { return tower_dict(bar_decompose(BarPartition(b), g)); });
    m.def("is_st_core", [](const Parts& p, int s, int t) { return is_st_core(Partition(p), s, t); });
    m.def("is_stbar_core", [](const Parts& b, int s, int t) { return is_stbar_core(BarPartition(b), s, t); });

    m.def("gks_encode", [](const Parts& p, int t) { return gks_encode(Partition(p), t).entries(); });
    m.def("gks_decode", [](const std::vector<int>& c) {
        return gks_decode(CoreTuple(static_cast<int>(c.size()), c)).parts();
    });
    m.def("olsson_encode", [](const Parts& b, int t) { return olsson_encode(BarPartition(b), t).entries(); });
    m.def("olsson_decode", [](const std::vector<int>& c, int t) { return olsson_decode(BarTuple(t, c)).parts(); });
    m.def("zeta", [](const Parts& p, int t) { return zeta(Partition(p), t).parts(); });
    m.def("zeta_inverse", [](const Parts& b, int t) { return zeta_inverse(BarPartition(b), t).parts(); });

    m.def("anderson_grid", [](int s, int t) { return grid_rows(anderson_grid(s, t)); });
    m.def("dh_grid", [](int s, int t) { return grid_rows(dh_grid(s, t)); });
    m.def("yinyang_grid", [](int s, int t) { return grid_rows(yinyang_grid(s, t)); });
    m.def("anderson_path_to_core", [](const std::string& steps, int s, int t) {
        return anderson_path_to_core(MonotonicPath(s, t, steps), s, t).parts();
    });
    m.def("anderson_core_to_path",
          [](const Parts& p, int s, int t) { return anderson_core_to_path(Partition(p), s, t).steps(); });
    m.def("dh_path_to_selfconj", [](const std::string& steps, int s, int t) {
        return dh_path_to_selfconj(MonotonicPath(s / 2, t / 2, steps), s, t).parts();
    });
    m.def("yy_path_to_barcore", [](const std::string& steps, int s, int t) {
        return yy_path_to_barcore(MonotonicPath((s - 1) / 2, (t - 1) / 2, steps), s, t).parts();
    });
    m.def("gamma", [](const Parts& p, int s, int t) { return gamma(Partition(p), s, t).parts(); });
    m.def("gamma_inverse", [](const Parts& b, int s, int t) { return gamma_inverse(BarPartition(b), s, t).parts(); });
    m.def("big_gamma", [](const Parts& p, int s, int t) { return big_gamma(Partition(p), s, t).parts(); });
    m.def("big_gamma_inverse",
          [](const Parts& b, int s, int t) { return big_gamma_inverse(BarPartition(b), s, t).parts(); });

    m.def(
        "series",
        [](const std::string& gf, int s, int t, int N) { return to_py(series_of(gf, s, t, N).coeffs()); },
        py::arg("gf"), py::arg("s") = 0, py::arg("t") = 0, py::arg("N") = 60);
    m.def(
        "congruence_scan",
        [](const py::list& coefficients, int g, int modulus) {
            std::vector<BigInt> c;
            for (const auto& x : coefficients) c.push_back(from_py(x));
            if (c.empty()) throw std::invalid_argument("no coefficients");
            const int n = static_cast<int>(c.size()) - 1;
            const auto report = congruence_scan(TruncatedSeries(n, std::move(c)), g, modulus);
            py::dict d;
            d["modulus"] = report.modulus;
            d["g"] = report.g;
            d["residues"] = report.residues;
            d["verified_to"] = report.verified_to;
            return d;
        },
        py::arg("coefficients"), py::arg("g"), py::arg("modulus"));

    m.def(
        "oracle_counts",
        [](const std::string& quantity, int s, int t, int N) { return to_py(count_table(quantity, s, t, N).counts); },
        py::arg("quantity"), py::arg("s") = 0, py::arg("t") = 0, py::arg("N") = 30);
    m.def("extremal_stats", [](int s, int t) {
        const auto stats = oracle::extremal_stats(s, t);
        return py::make_tuple(stats.total_count, stats.max_size);
    });

    m.def("suite_names", &suite_names);
    m.def(
        "verify",
        [](const std::string& suite, int N) {
            py::list out;
            for (const auto& r : suite == "all" ? run_all(N) : std::vector<SuiteResult>{run_suite(suite, N)}) {
                for (const auto& c : r.checks) out.append(py::make_tuple(r.suite, c.name, c.passed, c.detail));
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("N") = 40);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<std::string> argv{"simcore"};
        argv.insert(argv.end(), args.begin(), args.end());
        std::ostringstream out;
        std::ostringstream err;
        const int status = run_cli(argv, out, err);
        return py::make_tuple(status, out.str(), err.str());
    });
}
