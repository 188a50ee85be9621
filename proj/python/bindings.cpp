#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "blockcycle/constants.hpp"
#include "blockcycle/continuant.hpp"
#include "blockcycle/cost_model.hpp"
#include "blockcycle/euclid.hpp"
#include "blockcycle/fraction.hpp"
#include "blockcycle/move_ledger.hpp"
#include "blockcycle/rotation.hpp"

namespace py = pybind11;
namespace bc = blockcycle;

namespace {

using Items = std::vector<py::object>;

py::object to_python(const bc::Fraction& f) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(f.numerator(), f.denominator());
}

bc::Fraction from_python(const py::object& value) {
    const py::object f = py::module_::import("fractions").attr("Fraction")(value);
    return {f.attr("numerator").cast<std::int64_t>(), f.attr("denominator").cast<std::int64_t>()};
}

// Binds name(items, k, ...) -> list and name_counted(items, k, ...) -> (list, MoveLedger).
template <class Rotate>
void def_rotation(py::module_& m, const char* name, const char* doc, Rotate rotate) {
    m.def(
        name,
        [rotate](Items items, std::size_t k) {
            bc::MoveLedger ledger;
            rotate(std::span<py::object>(items), k, ledger);
            return items;
        },
        py::arg("items"), py::arg("k"), doc);
    m.def(
        (std::string(name) + "_counted").c_str(),
        [rotate](Items items, std::size_t k) {
            bc::MoveLedger ledger;
            rotate(std::span<py::object>(items), k, ledger);
            return std::make_pair(std::move(items), ledger);
        },
        py::arg("items"), py::arg("k"), "Same rotation, also returning its MoveLedger.");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Block cycle rotation with exact move accounting, and its cost analysis.";

    static py::exception<bc::DepthLimitError> depth_error(m, "DepthLimitError", PyExc_RuntimeError);

    py::class_<bc::MoveLedger>(m, "MoveLedger")
        .def(py::init<>())
        .def_readonly("type_a_moves", &bc::MoveLedger::type_a_moves)
        .def_readonly("type_b_moves", &bc::MoveLedger::type_b_moves)
        .def_readonly("swap_count", &bc::MoveLedger::swap_count)
        .def_property_readonly("total_moves", &bc::MoveLedger::total_moves)
        .def(py::self == py::self)
        .def("__repr__", [](const bc::MoveLedger& l) {
            std::ostringstream os;
            os << "MoveLedger" << l;
            return os.str();
        });

    // Rotations
    m.def(
        "rotate_oracle",
        [](const Items& items, std::size_t k) { return bc::rotate_oracle(std::span<const py::object>(items), k); },
        py::arg("items"), py::arg("k"), "Reference left rotation by k (out of place).");
    auto block_cycle = [](std::size_t early, std::size_t batch) {
        return [early, batch](std::span<py::object> s, std::size_t k, bc::MoveLedger& l) {
            bc::rotate_block_cycle(s, k, bc::BlockCycleConfig{early, batch}, l);
        };
    };
    m.def(
        "rotate_block_cycle",
        [block_cycle](Items items, std::size_t k, std::size_t early, std::size_t batch) {
            bc::MoveLedger ledger;
            block_cycle(early, batch)(std::span<py::object>(items), k, ledger);
            return std::make_pair(std::move(items), ledger);
        },
        py::arg("items"), py::arg("k"), py::arg("early_exit_capacity") = 1, py::arg("batch_capacity") = 1,
        "Block cycle left rotation by k; returns (rotated list, MoveLedger).");
    def_rotation(m, "rotate_block_swap", "Block-swap left rotation by k.",
                 [](std::span<py::object> s, std::size_t k, bc::MoveLedger& l) { bc::rotate_block_swap(s, k, l); });
    def_rotation(m, "rotate_triple_reverse", "Triple-reversal left rotation by k.",
                 [](std::span<py::object> s, std::size_t k, bc::MoveLedger& l) {
                     bc::rotate_triple_reverse(s, k, l);
                 });
    def_rotation(m, "rotate_trinity", "Trinity left rotation by k.",
                 [](std::span<py::object> s, std::size_t k, bc::MoveLedger& l) {
                     bc::rotate_trinity(s, k, bc::BlockCycleConfig{}, l);
                 });
    def_rotation(m, "rotate_dolphin", "Cycle-leader left rotation by k, 0 < k < len(items).",
                 [](std::span<py::object> s, std::size_t k, bc::MoveLedger& l) { bc::rotate_dolphin(s, k, l); });

    // Euclid and remainder sums
    py::class_<bc::EuclidTrace>(m, "EuclidTrace")
        .def_readonly("n", &bc::EuclidTrace::n)
        .def_readonly("remainders", &bc::EuclidTrace::remainders)
        .def_readonly("quotients", &bc::EuclidTrace::quotients)
        .def_property_readonly("gcd", &bc::EuclidTrace::gcd)
        .def_property_readonly("remainder_sum", &bc::EuclidTrace::remainder_sum);
    m.def("euclid_trace", &bc::euclid_trace, py::arg("n"), py::arg("k"));
    m.def("remainder_sum", &bc::remainder_sum, py::arg("n"), py::arg("k"));
    m.def("move_count", &bc::move_count, py::arg("n"), py::arg("k"));
    m.def("block_cycle_cost", &bc::block_cycle_cost, py::arg("n"), py::arg("k"), py::arg("buffer") = 1);
    m.def(
        "avg_cost",
        [](std::uint64_t n) {
            return to_python(bc::Fraction(static_cast<std::int64_t>(bc::avg_cost(n).total_moves),
                                          static_cast<std::int64_t>(n)));
        },
        py::arg("n"), "A(n) as an exact fraction.");
    m.def(
        "avg_remainder_full",
        [](std::uint64_t n) {
            return to_python(bc::Fraction(static_cast<std::int64_t>(bc::avg_remainder_full(n).total),
                                          static_cast<std::int64_t>(n)));
        },
        py::arg("n"), "(1/n) sum_{1<=k<=n} remainder_sum(n, k) as an exact fraction.");

    // Continuants and the Heilbronn correspondence
    m.def(
        "continuant", [](const std::vector<std::uint64_t>& w) { return bc::continuant(w); }, py::arg("word"));
    m.def(
        "heilbronn_expansions",
        [](std::uint64_t n) {
            std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> out;
            for (const auto& e : bc::heilbronn_expansions(n)) {
                out.emplace_back(e.split, e.word);
            }
            return out;
        },
        py::arg("n"), "Marked expansions as (split, word) pairs.");
    auto as_tuples = [](const std::vector<bc::HeilbronnQuadruple>& qs) {
        std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>> out;
        for (const auto& q : qs) {
            out.emplace_back(q.x, q.x_prime, q.y, q.y_prime);
        }
        return out;
    };
    m.def(
        "heilbronn_quadruples",
        [as_tuples](std::uint64_t n, bool both) { return as_tuples(bc::heilbronn_quadruples(n, both)); },
        py::arg("n"), py::arg("require_second_gcd") = true, "Quadruples (x, x', y, y') with n = x x' + y y'.");
    m.def("mobius", &bc::mobius, py::arg("d"));
    m.def("big_g", &bc::big_g, py::arg("n"));
    m.def("big_g_star", &bc::big_g_star, py::arg("n"));
    m.def("big_g_star_mobius", &bc::big_g_star_mobius, py::arg("n"));
    m.def(
        "heilbronn_identities",
        [](std::uint64_t n) {
            const bc::HeilbronnIdentity id = bc::heilbron_identity_check(n);
            return std::make_pair(id.coprime_form(), id.unrestricted_form());
        },
        py::arg("n"), "(coprime identity holds, unrestricted identity holds).");

    // Constants
    py::class_<bc::Bracket>(m, "Bracket")
        .def_readonly("lower", &bc::Bracket::lower)
        .def_readonly("upper", &bc::Bracket::upper)
        .def_property_readonly("width", &bc::Bracket::width)
        .def_property_readonly("midpoint", &bc::Bracket::midpoint)
        .def("__contains__", &bc::Bracket::contains)
        .def("__repr__", [](const bc::Bracket& b) {
            return "Bracket(" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + ")";
        });
    py::class_<bc::SeriesEstimate>(m, "SeriesEstimate")
        .def_readonly("cutoff", &bc::SeriesEstimate::cutoff)
        .def_readonly("truncated_lower", &bc::SeriesEstimate::truncated_lower)
        .def_readonly("truncated_upper", &bc::SeriesEstimate::truncated_upper)
        .def_readonly("lower", &bc::SeriesEstimate::lower)
        .def_readonly("upper", &bc::SeriesEstimate::upper)
        .def_property_readonly("bracket", &bc::SeriesEstimate::bracket);
    m.def("zeta3_bracket", &bc::zeta3_bracket, py::arg("terms") = 1'000'000);
    m.def("constant_C", &bc::constant_C, py::arg("cutoff"));
    m.def("constant_D", &bc::constant_D, py::arg("cutoff"));

    // Continuous cost model
    py::class_<bc::SeriesDepthPolicy>(m, "SeriesDepthPolicy")
        .def(py::init<double, int>(), py::arg("tolerance") = 1e-9, py::arg("max_depth") = 64)
        .def_readwrite("tolerance", &bc::SeriesDepthPolicy::tolerance)
        .def_readwrite("max_depth", &bc::SeriesDepthPolicy::max_depth)
        .def_property_readonly("depth", &bc::SeriesDepthPolicy::depth);
    m.def(
        "simple_cost", [](double nu, double kappa, double beta) { return bc::simple_cost({nu, kappa, beta}); },
        py::arg("nu"), py::arg("kappa"), py::arg("beta"));
    m.def("gauss_fraction", &bc::gauss_fraction, py::arg("x"));
    m.def("inside_map", &bc::inside_map, py::arg("x"));
    m.def("outside_map", &bc::outside_map, py::arg("x"));
    m.def(
        "psi", [](double x, const bc::SeriesDepthPolicy& p) { return bc::psi(x, p); }, py::arg("x"),
        py::arg("policy") = bc::SeriesDepthPolicy{});
    m.def(
        "rel_cost", [](double x, const bc::SeriesDepthPolicy& p) { return bc::rel_cost(x, p); }, py::arg("x"),
        py::arg("policy") = bc::SeriesDepthPolicy{});
    m.def(
        "rel_cost_exact", [](const py::object& x) { return to_python(bc::rel_cost(from_python(x))); },
        py::arg("x"), "f at a rational point, as a fractions.Fraction.");
    m.def("rel_cost_buffered", &bc::rel_cost_buffered, py::arg("x"), py::arg("beta"));
    m.def("sample_grid", &bc::sample_grid, py::arg("samples"));
    m.def("expected_cost", &bc::expected_cost, py::arg("beta"), py::arg("samples") = 1 << 16,
          py::arg("policy") = bc::SeriesDepthPolicy{});
    m.def("moment", &bc::moment, py::arg("order"), py::arg("samples") = 1 << 16,
          py::arg("policy") = bc::SeriesDepthPolicy{});
    py::class_<bc::CostDistribution>(m, "CostDistribution")
        .def_readonly("mean", &bc::CostDistribution::mean)
        .def_readonly("second_moment", &bc::CostDistribution::second_moment)
        .def_readonly("standard_deviation", &bc::CostDistribution::standard_deviation)
        .def_readonly("samples", &bc::CostDistribution::samples);
    m.def("cost_distribution", &bc::cost_distribution, py::arg("samples") = 1 << 16,
          py::arg("policy") = bc::SeriesDepthPolicy{});
    m.def(
        "self_similarity_residual",
        [](double y, int m_, const bc::SeriesDepthPolicy& p) { return bc::self_similarity_residual(y, m_, p); },
        py::arg("y"), py::arg("m"), py::arg("policy") = bc::SeriesDepthPolicy{});
}
