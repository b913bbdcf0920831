// Python bindings for the group testing code library. Bit vectors cross the
// boundary as strings of '0'/'1'; index sets as 0-based integer lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gtcodes/construct.hpp>
#include <gtcodes/decode.hpp>
#include <gtcodes/exec.hpp>
#include <gtcodes/models.hpp>
#include <gtcodes/verify.hpp>

namespace py = pybind11;
using namespace gtcodes;

namespace {

constexpr std::uint64_t kEnumerationCap = 1000000;

ResultVector parse_result(const BinaryCode& code, const std::string& bits) {
    ResultVector r = BitVector::from_string(bits);
    if (r.size() != code.num_rows())
        throw DimensionError("result length does not match the code");
    return r;
}

std::string mode_string(const VerifyReport& r) {
    return r.mode == VerifyReport::Mode::exhaustive ? "exhaustive"
                                                    : "randomized";
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Nonadaptive group testing codes: construction, verification, "
              "decoding and simulation primitives";

    py::register_exception<TooLargeError>(m, "TooLargeError",
                                          PyExc_RuntimeError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError",
                                           PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<BinaryCode>(m, "BinaryCode")
        .def_static("from_text",
                    [](const std::string& text) { return parse_code(text); })
        .def("to_text", [](const BinaryCode& c) { return serialize_code(c); })
        .def_property_readonly("num_rows", &BinaryCode::num_rows)
        .def_property_readonly("num_cols", &BinaryCode::num_cols)
        .def("get", &BinaryCode::get, py::arg("row"), py::arg("col"))
        .def("column",
             [](const BinaryCode& c, std::size_t u) {
                 if (u >= c.num_cols())
                     throw DomainError("column index out of range");
                 return c.column(u).to_string();
             })
        .def("row",
             [](const BinaryCode& c, std::size_t n) {
                 if (n >= c.num_rows())
                     throw DomainError("row index out of range");
                 return c.row(n).to_string();
             })
        .def("__eq__", [](const BinaryCode& a,
                          const BinaryCode& b) { return a == b; })
        .def("__repr__", [](const BinaryCode& c) {
            return "<BinaryCode " + std::to_string(c.num_rows()) + "x" +
                   std::to_string(c.num_cols()) + ">";
        });

    py::class_<QaryCode>(m, "QaryCode")
        .def_static("from_text", [](const std::string& text) {
            return parse_qary_code(text);
        })
        .def("to_text",
             [](const QaryCode& c) { return serialize_qary_code(c); })
        .def_property_readonly("num_rows", &QaryCode::num_rows)
        .def_property_readonly("num_cols", &QaryCode::num_cols)
        .def_property_readonly("alphabet_size", &QaryCode::alphabet_size)
        .def("get", &QaryCode::get, py::arg("row"), py::arg("col"))
        .def("__eq__",
             [](const QaryCode& a, const QaryCode& b) { return a == b; })
        .def("__repr__", [](const QaryCode& c) {
            return "<QaryCode " + std::to_string(c.num_rows()) + "x" +
                   std::to_string(c.num_cols()) + " q=" +
                   std::to_string(c.alphabet_size()) + ">";
        });

    py::class_<MdsParams>(m, "MdsParams")
        .def_readonly("q", &MdsParams::q)
        .def_readonly("k", &MdsParams::k)
        .def_readonly("n", &MdsParams::n)
        .def_readonly("d", &MdsParams::d);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("property", &VerifyReport::property)
        .def_readonly("holds", &VerifyReport::holds)
        .def_readonly("checked", &VerifyReport::checked)
        .def_readonly("seed", &VerifyReport::seed)
        .def_readonly("trials", &VerifyReport::trials)
        .def_readonly("witness", &VerifyReport::witness)
        .def_property_readonly("mode", &mode_string)
        .def("verdict_line", &VerifyReport::verdict_line)
        .def("__bool__", [](const VerifyReport& r) { return r.holds; })
        .def("__repr__", [](const VerifyReport& r) {
            return "<VerifyReport " + r.verdict_line() + ">";
        });

    // Constructions
    m.def("trivial_code", &trivial_code, py::arg("t"), py::arg("s"),
          py::arg("l"));
    m.def("identity_code", &identity_code, py::arg("t"));
    m.def("reed_solomon",
          [](std::uint32_t q, std::uint32_t lambda) {
              ReedSolomonCode rs = reed_solomon(q, lambda);
              return py::make_tuple(rs.code, rs.params);
          },
          py::arg("q"), py::arg("lam"));
    m.def("concatenate", &concatenate, py::arg("external"),
          py::arg("internal"));
    m.def("dedupe_rows", &dedupe_rows, py::arg("code"));
    m.def("rs_concatenation", &rs_concatenation, py::arg("s"), py::arg("l"),
          py::arg("lam"), py::arg("q"), py::arg("internal"));
    m.def("restrict_columns",
          [](const BinaryCode& code, const std::vector<std::uint32_t>& keep) {
              return restrict_columns(code, keep);
          },
          py::arg("code"), py::arg("keep"));
    m.def("take_rows", &take_rows, py::arg("code"), py::arg("count"));
    m.def("builtin",
          [](const std::string& name) -> py::object {
              auto matrix = builtin(name);
              if (std::holds_alternative<BinaryCode>(matrix))
                  return py::cast(std::get<BinaryCode>(matrix));
              return py::cast(std::get<QaryCode>(matrix));
          },
          py::arg("name"));

    // Verification
    m.def("is_superimposed", &is_superimposed, py::arg("code"), py::arg("s"));
    m.def("is_superimposed_sl", &is_superimposed_sl, py::arg("code"),
          py::arg("s"), py::arg("l"));
    m.def("is_inhibitory_code", &is_inhibitory_code, py::arg("code"),
          py::arg("s"), py::arg("i"));
    m.def("is_separating", &is_separating, py::arg("code"), py::arg("s"),
          py::arg("l"));
    m.def("min_distance", &min_distance, py::arg("code"));
    m.def("is_mds", &is_mds, py::arg("code"), py::arg("k"));
    m.def("mds_implies_separating", &mds_implies_separating, py::arg("q"),
          py::arg("k"), py::arg("n"), py::arg("s"), py::arg("l"));
    m.def("oracle_disjunct_design", &oracle_disjunct_design, py::arg("code"),
          py::arg("s"));
    m.def("oracle_superset_design", &oracle_superset_design, py::arg("code"),
          py::arg("s"), py::arg("l"));
    m.def("oracle_inhibitory_design", &oracle_inhibitory_design,
          py::arg("code"), py::arg("s"), py::arg("i"));
    m.def("spot_check_sl", &spot_check_sl, py::arg("code"), py::arg("s"),
          py::arg("l"), py::arg("trials"), py::arg("seed"));

    // Test models
    m.def("result_disjunct",
          [](const BinaryCode& code, IndexSet members) {
              auto t = static_cast<std::uint32_t>(code.num_cols());
              return result_disjunct(
                         code, DefectiveSet::make(t, std::move(members)))
                  .to_string();
          },
          py::arg("code"), py::arg("defectives"));
    m.def("result_superset",
          [](const BinaryCode& code, std::vector<IndexSet> parts) {
              auto t = static_cast<std::uint32_t>(code.num_cols());
              return result_superset(code,
                                     Complex::make(t, std::move(parts)))
                  .to_string();
          },
          py::arg("code"), py::arg("parts"));
    m.def("result_inhibitor",
          [](const BinaryCode& code, IndexSet defectives, IndexSet inhibitors) {
              auto t = static_cast<std::uint32_t>(code.num_cols());
              return result_inhibitor(
                         code, InhibitorInstance::make(t, std::move(defectives),
                                                       std::move(inhibitors)))
                  .to_string();
          },
          py::arg("code"), py::arg("defectives"), py::arg("inhibitors"));

    m.def("enumerate_defective_sets",
          [](std::uint32_t t, std::uint32_t s) {
              DefectiveSetEnumerator en(t, s);
              std::vector<IndexSet> out;
              while (auto p = en.next()) {
                  if (out.size() >= kEnumerationCap)
                      throw TooLargeError("enumeration exceeds the cap");
                  out.push_back(p->members);
              }
              return out;
          },
          py::arg("t"), py::arg("s"));
    m.def("enumerate_complexes",
          [](std::uint32_t t, std::uint32_t s, std::uint32_t l) {
              ComplexEnumerator en(t, s, l);
              std::vector<std::vector<IndexSet>> out;
              while (auto p = en.next()) {
                  if (out.size() >= kEnumerationCap)
                      throw TooLargeError("enumeration exceeds the cap");
                  out.push_back(p->parts);
              }
              return out;
          },
          py::arg("t"), py::arg("s"), py::arg("l"));
    m.def("enumerate_pi",
          [](std::uint32_t t, std::uint32_t s, std::uint32_t i) {
              PiEnumerator en(t, s, i);
              std::vector<std::pair<IndexSet, IndexSet>> out;
              while (auto inst = en.next()) {
                  if (out.size() >= kEnumerationCap)
                      throw TooLargeError("enumeration exceeds the cap");
                  out.emplace_back(inst->defectives, inst->inhibitors);
              }
              return out;
          },
          py::arg("t"), py::arg("s"), py::arg("i"));

    // Decoders
    m.def("decode_disjunct",
          [](const BinaryCode& code, const std::string& r, std::uint32_t s) {
              return decode_disjunct(code, parse_result(code, r), s).members;
          },
          py::arg("code"), py::arg("result"), py::arg("s"));
    m.def("decode_superset",
          [](const BinaryCode& code, const std::string& r, std::uint32_t s,
             std::uint32_t l) {
              return decode_superset(code, parse_result(code, r), s, l).parts;
          },
          py::arg("code"), py::arg("result"), py::arg("s"), py::arg("l"));
    m.def("decode_inhibitor",
          [](const BinaryCode& code, const std::string& r, std::uint32_t s,
             std::uint32_t i) {
              return decode_inhibitor(code, parse_result(code, r), s, i)
                  .members;
          },
          py::arg("code"), py::arg("result"), py::arg("s"), py::arg("i"));

    m.def("set_max_threads", &exec::set_max_threads, py::arg("k"));

#ifdef GTCODES_VERSION
    m.attr("__version__") = GTCODES_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
