#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "combperm/acceptance.hpp"
#include "combperm/identities.hpp"
#include "combperm/metatile.hpp"
#include "combperm/permanents.hpp"
#include "combperm/recurrence.hpp"
#include "combperm/tile_spec.hpp"
#include "combperm/tiling.hpp"

namespace py = pybind11;
using namespace combperm;

namespace pybind11::detail {

// cpp_int <-> python int, exact in both directions (via decimal strings).
template <>
struct type_caster<BigInt> {
    PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = BigInt(py::cast<std::string>(py::str(src)));
        return true;
    }

    static handle cast(const BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

RecurrenceSpec spec_from(const std::vector<std::pair<int, long long>>& terms) {
    return RecurrenceSpec(terms);
}

std::vector<BigInt> table_values(const SequenceTable& t) { return t.values; }

py::list board_placements(const Board& b) {
    py::list out;
    for (const auto& pl : b.placements) {
        const auto& sh = b.shape(pl);
        out.append(py::make_tuple(sh.label, pl.start, pl.color));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact comb/fence tiling counts, metatile censuses, and permanents of banded (0,1) "
              "Toeplitz matrices";

    py::class_<TileShape>(m, "TileShape")
        .def(py::init([](int p, int tooth_len, int gap_len, int teeth,
                         std::optional<std::vector<int>> alignment, long long colors, std::string label) {
                 TileShape t{p, tooth_len, gap_len, teeth, std::move(alignment), colors, std::move(label)};
                 t.validate();
                 return t;
             }),
             py::arg("resolution"), py::arg("tooth_len"), py::arg("gap_len"), py::arg("teeth"),
             py::arg("alignment") = std::nullopt, py::arg("colors") = 1, py::arg("label") = "")
        .def_readonly("resolution", &TileShape::resolution)
        .def_readonly("tooth_len", &TileShape::tooth_len)
        .def_readonly("gap_len", &TileShape::gap_len)
        .def_readonly("teeth", &TileShape::teeth)
        .def_readonly("alignment", &TileShape::alignment)
        .def_readonly("colors", &TileShape::colors)
        .def_readonly("label", &TileShape::label)
        .def_property_readonly("extent", &TileShape::extent)
        .def("__repr__", [](const TileShape& t) {
            return "<TileShape " + t.label + " teeth=" + std::to_string(t.teeth) + ">";
        });

    py::class_<Board>(m, "Board")
        .def_readonly("cells", &Board::cells)
        .def_readonly("resolution", &Board::resolution)
        .def_property_readonly("placements", &board_placements)
        .def("symbolic", &Board::symbolic)
        .def("complete", &Board::complete)
        .def("distinct_labels", &Board::distinct_labels)
        .def("__eq__", [](const Board& a, const Board& b) { return a == b; })
        .def("__repr__", [](const Board& b) {
            return "<Board " + std::to_string(b.cells) + " cells: " + b.symbolic() + ">";
        });

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("id", &IdentityReport::id)
        .def_readonly("params", &IdentityReport::params)
        .def_readonly("n_min", &IdentityReport::n_min)
        .def_readonly("n_max", &IdentityReport::n_max)
        .def_readonly("verified", &IdentityReport::verified)
        .def_readonly("fail_n", &IdentityReport::fail_n)
        .def_readonly("lhs", &IdentityReport::lhs)
        .def_readonly("rhs", &IdentityReport::rhs)
        .def_readonly("elapsed_s", &IdentityReport::elapsed_s)
        .def("describe", &IdentityReport::describe)
        .def("__repr__", [](const IdentityReport& r) { return "<IdentityReport " + r.describe() + ">"; });

    py::class_<CriterionResult>(m, "CriterionResult")
        .def_readonly("index", &CriterionResult::index)
        .def_readonly("name", &CriterionResult::name)
        .def_readonly("pass_", &CriterionResult::pass)
        .def_readonly("detail", &CriterionResult::detail)
        .def_readonly("elapsed_s", &CriterionResult::elapsed_s)
        .def("__repr__", [](const CriterionResult& r) {
            return std::string(r.pass ? "<PASS " : "<FAIL ") + std::to_string(r.index) + ": " + r.name + ">";
        });

    // sequences
    m.def(
        "eval_sequence",
        [](const std::vector<std::pair<int, long long>>& terms, long N) {
            return table_values(eval_sequence(spec_from(terms), N));
        },
        py::arg("terms"), py::arg("n"), "s_0..s_n for s_k = sum_i v_i s_{k-m_i} + [k==0]");
    m.def(
        "power_product",
        [](const std::vector<std::pair<int, long long>>& terms, int p, int r, long n) {
            return power_product(eval_sequence(spec_from(terms), n + 1), p, r, n);
        },
        py::arg("terms"), py::arg("p"), py::arg("r"), py::arg("n"), "s_n^{p-r} * s_{n+1}^r");

    // tiling
    m.def("make_comb", &make_comb, py::arg("p"), py::arg("m"), py::arg("colors") = 1, py::arg("label") = "");
    m.def("make_fence", &make_fence, py::arg("g"), py::arg("barred"));
    m.def(
        "fence_tiles_from_w",
        [](const std::vector<int>& w) { return fence_tiles_from_W(OffsetSet(w)); }, py::arg("w"));
    m.def("parse_tile_spec", &parse_tile_spec, py::arg("spec"), py::arg("p"));
    m.def("count_tilings", &count_tilings, py::arg("cells"), py::arg("tiles"), py::arg("p"));
    m.def("enumerate_tilings", &enumerate_tilings, py::arg("cells"), py::arg("tiles"), py::arg("p"),
          py::arg("cap") = kDefaultEnumCap);
    m.def("enumerate_metatiles", &enumerate_metatiles, py::arg("length"), py::arg("tiles"), py::arg("p"),
          py::arg("cap") = kDefaultEnumCap);
    m.def("slot_swap", &slot_swap, py::arg("board"));
    m.def("decompose_metatiles", &decompose_metatiles, py::arg("board"));

    // metatiles
    m.def(
        "census",
        [](const std::vector<TileShape>& tiles, int p, int lmax) {
            const auto c = census(tiles, p, lmax);
            py::list rows;
            for (int l = 1; l <= lmax; ++l) rows.append(py::make_tuple(l, c.total_at(l), c.mixed_at(l)));
            return rows;
        },
        py::arg("tiles"), py::arg("p"), py::arg("lmax"), "rows (l, total, mixed) for l = 1..lmax");
    m.def(
        "mu", [](int m1, int m2, int lmax) { return table_values(mu(m1, m2, lmax)); }, py::arg("m1"),
        py::arg("m2"), py::arg("lmax"), "mu_l indexed by metatile length l = 0..lmax");
    m.def(
        "digraph_dot",
        [](const std::vector<TileShape>& tiles, int p, bool interior, int start_residue, bool compress,
           int node_cap) {
            DigraphOptions opts;
            opts.interior = interior;
            opts.start_residue = start_residue;
            opts.compress = compress;
            opts.node_cap = node_cap;
            return export_digraph(tiles, p, opts).to_dot();
        },
        py::arg("tiles"), py::arg("p"), py::arg("interior") = false, py::arg("start_residue") = 0,
        py::arg("compress") = true, py::arg("node_cap") = 10000);

    // permanents
    m.def(
        "count_restricted_perms",
        [](long n, const std::vector<int>& w) { return count_restricted_perms(n, OffsetSet(w)); },
        py::arg("n"), py::arg("w"));
    m.def(
        "permanent_ryser",
        [](const std::vector<std::vector<int>>& rows) {
            const int n = static_cast<int>(rows.size());
            ZeroOneMatrix M(n);
            for (int i = 0; i < n; ++i) {
                if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
                    throw std::invalid_argument("matrix must be square");
                for (int j = 0; j < n; ++j)
                    M.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ? 1 : 0;
            }
            return permanent_ryser(M);
        },
        py::arg("rows"));
    m.def(
        "toeplitz_from_w",
        [](int n, const std::vector<int>& w) {
            const auto M = toeplitz_from_W(n, OffsetSet(w));
            std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)].push_back(M.at(i, j));
            return rows;
        },
        py::arg("n"), py::arg("w"));
    m.def(
        "theorem1_sequence",
        [](const std::vector<int>& w, long N) { return table_values(theorem1_sequence(OffsetSet(w), N)); },
        py::arg("w"), py::arg("n"));
    m.def(
        "mirror", [](const std::vector<int>& w) { return mirror(OffsetSet(w)).offsets; }, py::arg("w"));
    m.def(
        "a080013_sequence", [](long N) { return table_values(a080013_sequence(N)); }, py::arg("n"));

    // identities
    m.def("verify_identity_gen1", &verify_identity_gen1, py::arg("m"), py::arg("n"));
    m.def("verify_identity_sum", &verify_identity_sum, py::arg("m"), py::arg("n"));
    m.def("verify_identity_block", &verify_identity_block, py::arg("m"), py::arg("j"), py::arg("n"));
    m.def("verify_identity_mixed", &verify_identity_mixed, py::arg("m"), py::arg("n"));
    m.def("verify_identity_gen2", &verify_identity_gen2, py::arg("m"), py::arg("n"));
    m.def("verify_identity_mixed2", &verify_identity_mixed2, py::arg("m"), py::arg("n"));
    m.def("verify_narayana_padovan", &verify_narayana_padovan, py::arg("n"));
    m.def(
        "verify_theorem2",
        [](const std::vector<std::pair<int, long long>>& terms, int p, long N) {
            return verify_theorem2(spec_from(terms), p, N);
        },
        py::arg("terms"), py::arg("p"), py::arg("n"));
    m.def(
        "verify_corollary3",
        [](const std::vector<std::pair<int, long long>>& terms, int p, long N) {
            return verify_corollary3(spec_from(terms), p, N);
        },
        py::arg("terms"), py::arg("p"), py::arg("n"));
    m.def("verify_mu_theorems", &verify_mu_theorems, py::arg("m_max"), py::arg("l_max"));

    m.def("run_acceptance", &run_acceptance);
}
