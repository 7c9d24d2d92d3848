#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "covering/bounds.hpp"
#include "covering/construction.hpp"
#include "covering/exact_solver.hpp"
#include "covering/serialization.hpp"

namespace py = pybind11;
using namespace covering;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

Code make_code(unsigned q, unsigned n, const std::vector<std::string>& words) {
  const HammingSpace space(q, n);
  std::vector<Word> parsed;
  parsed.reserve(words.size());
  for (const auto& w : words) parsed.push_back(parse_word(space, w));
  return Code(space, std::move(parsed));
}

std::vector<std::string> word_strings(const Code& code) {
  std::vector<std::string> out;
  out.reserve(code.size());
  for (const Word& w : code.words()) out.push_back(format_word(code.space(), w));
  return out;
}

py::tuple density_tuple(const DensityValue& d) {
  return py::make_tuple(to_py(boost::multiprecision::numerator(d.exact)),
                        to_py(boost::multiprecision::denominator(d.exact)), d.approx);
}

}  // namespace

PYBIND11_MODULE(_covering, m) {
  m.doc() = "Covering codes in Hamming space (C++ core)";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("ball_volume", [](unsigned q, unsigned n, unsigned R) { return to_py(ball_volume(HammingSpace(q, n), R)); },
        py::arg("q"), py::arg("n"), py::arg("R"));
  m.def("hamming_distance",
        [](const std::vector<Symbol>& u, const std::vector<Symbol>& v) { return hamming_distance(Word(u), Word(v)); });
  m.def("word_index", [](unsigned q, const std::vector<Symbol>& w) {
    return word_index(HammingSpace(q, static_cast<unsigned>(w.size())), Word(w));
  });
  m.def("index_word", [](unsigned q, unsigned n, Index i) {
    const Word w = index_word(HammingSpace(q, n), i);
    return std::vector<Symbol>(w.symbols().begin(), w.symbols().end());
  });
  m.def("enumerate_ball", [](unsigned q, const std::string& center, unsigned R) {
    const HammingSpace space(q, q <= 10 ? static_cast<unsigned>(center.size())
                                        : static_cast<unsigned>(std::count(center.begin(), center.end(), ',') + 1));
    std::vector<std::string> out;
    for_each_in_ball(space, parse_word(space, center), R, [&](const Word& w) { out.push_back(format_word(space, w)); });
    return out;
  });
  m.def("sphere_covering_lower_bound",
        [](unsigned q, unsigned n, unsigned R) { return to_py(sphere_covering_lower_bound(HammingSpace(q, n), R)); });

  m.def(
      "verify_covering",
      [](unsigned q, unsigned n, const std::vector<std::string>& words, unsigned R) -> py::object {
        const Code code = make_code(q, n, words);
        const CoverVerdict v = verify_covering(code, R);
        if (v.ok()) return py::none();
        return py::str(format_word(code.space(), *v.witness));
      },
      py::arg("q"), py::arg("n"), py::arg("words"), py::arg("R"),
      "None when the code covers; otherwise the smallest uncovered word.");
  m.def(
      "verify_covering_sampled",
      [](unsigned q, unsigned n, const std::vector<std::string>& words, unsigned R, std::uint64_t samples,
         std::uint64_t seed) -> py::object {
        const Code code = make_code(q, n, words);
        const CoverVerdict v = verify_covering_sampled(code, R, samples, seed);
        if (v.ok()) return py::none();
        return py::str(format_word(code.space(), *v.witness));
      },
      py::arg("q"), py::arg("n"), py::arg("words"), py::arg("R"), py::arg("samples"), py::arg("seed") = 0);
  m.def(
      "density",
      [](unsigned q, unsigned n, const std::vector<std::string>& words, unsigned R) {
        return density_tuple(density(make_code(q, n, words), R));
      },
      py::arg("q"), py::arg("n"), py::arg("words"), py::arg("R"), "(numerator, denominator, float)");

  m.def(
      "minimal_covering_code",
      [](unsigned q, unsigned n, unsigned R, double time_budget, std::uint64_t node_budget) {
        const SolveResult r = [&] {
          py::gil_scoped_release release;
          return minimal_covering_code(HammingSpace(q, n), R, {time_budget, node_budget});
        }();
        return solve_result_to_json(r, R).dump();
      },
      py::arg("q"), py::arg("n"), py::arg("R"), py::arg("time_budget") = 60.0, py::arg("node_budget") = 100'000'000);

  m.def(
      "ksv_construct",
      [](unsigned q, unsigned n, unsigned R, double x, double y, std::uint64_t seed, const std::string& base_policy) {
        ConstructionOptions opts;
        opts.seed = seed;
        opts.base_policy = parse_base_policy(base_policy);
        ConstructionResult r = [&] {
          py::gil_scoped_release release;
          return ksv_construct(HammingSpace(q, n), R, x, y, opts);
        }();
        return py::make_tuple(word_strings(r.code), trace_to_json(r.trace).dump());
      },
      py::arg("q"), py::arg("n"), py::arg("R"), py::arg("x"), py::arg("y"), py::arg("seed") = 0,
      py::arg("base_policy") = "auto");

  namespace b = covering::bounds;
  auto params = [](unsigned R, double x, double y) { return b::BoundParams{.R = R, .x = x, .y = y}; };
  m.def("feasibility", [=](unsigned R, double x, double y) { return b::feasibility(params(R, x, y)); },
        py::arg("R"), py::arg("x"), py::arg("y"));
  m.def("theorem1_bound", [=](unsigned R, double x, double y) { return b::theorem1_bound(params(R, x, y)); },
        py::arg("R"), py::arg("x"), py::arg("y"));
  m.def("theorem1_bound_closed",
        [=](unsigned R, double x, double y) { return b::theorem1_bound_closed(params(R, x, y)); }, py::arg("R"),
        py::arg("x"), py::arg("y"));
  m.def(
      "theorem15_bound",
      [](unsigned R, double x, double y, unsigned R1, std::optional<double> mu) {
        return b::theorem15_bound({.R = R, .x = x, .y = y, .R1 = R1, .mu_star_R1 = mu});
      },
      py::arg("R"), py::arg("x"), py::arg("y"), py::arg("R1"), py::arg("mu") = py::none());
  m.def("corollary_bound_new", &b::corollary_bound_new, py::arg("R"));
  m.def("corollary_bound_ksv", &b::corollary_bound_ksv, py::arg("q"), py::arg("R"));
  m.def(
      "corollary2_chain_check",
      [](unsigned R) {
        const b::ChainReport rep = b::corollary2_chain_check(R);
        py::dict steps;
        for (const auto& s : rep.steps) steps[py::str(s.name)] = py::make_tuple(s.lhs, s.rhs, s.holds);
        return py::make_tuple(rep.holds(), steps);
      },
      py::arg("R"));
  m.def(
      "optimize_theorem1",
      [](unsigned R) {
        const b::OptimumPoint p = b::optimize_theorem1(R);
        return py::make_tuple(p.x, p.y, p.bound);
      },
      py::arg("R"));
  m.def("limit_lemma_bound", &b::limit_lemma_bound, py::arg("a"), py::arg("b"));
  m.def("bounds_table_csv", &b::bounds_table_csv, py::arg("R_min"), py::arg("R_max"));
}
