#include "dualbasis/cli/report_io.hpp"

#include <array>

#include "dualbasis/cli/table.hpp"

namespace dualbasis::pairing {

namespace {

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> get_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

void to_json(nlohmann::json& j, const PairingReport& r) {
  j = nlohmann::json{
      {"branch", to_string(r.branch)},
      {"phi", r.phi},
      {"m", r.m},
      {"n", r.n},
      {"a_variant", r.a_variant ? nlohmann::json(to_string(*r.a_variant)) : nlohmann::json(nullptr)},
      {"nodes_n", r.nodes_n},
      {"nodes_n_hi", r.nodes_n_hi},
      {"quadrature_value", r.quadrature_value},
      {"quadrature_value_hi", r.quadrature_value_hi},
      {"closed_form", opt(r.closed_form)},
      {"closed_form_exact", opt(r.closed_form_exact)},
      {"paper_target", opt(r.paper_target)},
      {"convergence_delta", r.convergence_delta},
      {"basis_tail_bound", r.basis_tail_bound},
      {"verdict", to_string(r.verdict)},
      {"note", r.note},
      {"error", opt(r.error)},
  };
}

void from_json(const nlohmann::json& j, PairingReport& r) {
  r.branch = branch_from_string(j.at("branch").get<std::string>());
  r.phi = j.at("phi").get<double>();
  r.m = j.at("m").get<int>();
  r.n = j.at("n").get<int>();
  if (auto v = get_opt<std::string>(j, "a_variant")) r.a_variant = variant_from_string(*v);
  else r.a_variant.reset();
  r.nodes_n = j.at("nodes_n").get<int>();
  r.nodes_n_hi = j.at("nodes_n_hi").get<int>();
  r.quadrature_value = j.at("quadrature_value").get<double>();
  r.quadrature_value_hi = j.at("quadrature_value_hi").get<double>();
  r.closed_form = get_opt<double>(j, "closed_form");
  r.closed_form_exact = get_opt<std::string>(j, "closed_form_exact");
  r.paper_target = get_opt<double>(j, "paper_target");
  r.convergence_delta = j.at("convergence_delta").get<double>();
  r.basis_tail_bound = j.at("basis_tail_bound").get<double>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.note = j.at("note").get<std::string>();
  r.error = get_opt<std::string>(j, "error");
}

}  // namespace dualbasis::pairing

namespace dualbasis::cli {

using pairing::Branch;
using pairing::PairingReport;
using pairing::Verdict;
using pairing::to_string;

std::string reports_to_json(const std::vector<PairingReport>& reports) {
  return nlohmann::json(reports).dump(2) + "\n";
}

std::vector<PairingReport> reports_from_json(const std::string& text) {
  return nlohmann::json::parse(text).get<std::vector<PairingReport>>();
}

namespace {

std::string opt_num(const std::optional<double>& v) { return v ? format_double(*v, 'g', 17) : ""; }

}  // namespace

void write_reports_csv(std::ostream& os, const std::vector<PairingReport>& reports) {
  os << "branch,phi,m,n,a_variant,nodes_n,nodes_n_hi,quadrature_value,quadrature_value_hi,"
        "closed_form,closed_form_exact,paper_target,convergence_delta,basis_tail_bound,verdict,note,error\n";
  for (const auto& r : reports) {
    os << to_string(r.branch) << ',' << format_double(r.phi, 'g', 17) << ',' << r.m << ',' << r.n << ','
       << (r.a_variant ? std::string(to_string(*r.a_variant)) : "") << ',' << r.nodes_n << ',' << r.nodes_n_hi
       << ',' << format_double(r.quadrature_value, 'g', 17) << ','
       << format_double(r.quadrature_value_hi, 'g', 17) << ',' << opt_num(r.closed_form) << ','
       << csv_escape(r.closed_form_exact.value_or("")) << ',' << opt_num(r.paper_target) << ','
       << format_double(r.convergence_delta, 'g', 17) << ',' << format_double(r.basis_tail_bound, 'g', 17)
       << ',' << to_string(r.verdict) << ',' << csv_escape(r.note) << ',' << csv_escape(r.error.value_or(""))
       << '\n';
  }
}

std::string render_verdict_markdown(const PairingReport& r) {
  if (r.error) return "ERROR: " + *r.error;
  switch (r.verdict) {
    case Verdict::match: return "match";
    case Verdict::converged_mismatch: return "**CONVERGED-MISMATCH**";
    case Verdict::unconverged: return "UNCONVERGED";
  }
  return "";
}

namespace {

std::string branch_title(Branch b, double phi) {
  switch (b) {
    case Branch::alt: return "Alternating branch, w(x) = csc(2πx)";
    case Branch::sym: return "Symmetric branch, w(x) = cot(πx)";
    case Branch::cross_alt: return "Cross pairing B_{2m+1} · A_{2n+1}, w(x) = csc(2πx)";
    case Branch::cross_sym: return "Cross pairing B_{2m} · C_{2n}, w(x) = cot(πx)";
    case Branch::rotated: return "Rotated weight, φ = " + format_double(phi, 'g', 17);
  }
  return "";
}

std::string closed_form_text(const PairingReport& r) {
  if (r.closed_form_exact) return *r.closed_form_exact;
  if (r.closed_form) return format_double(*r.closed_form, 'f', 10);
  return "";
}

}  // namespace

void write_reports_markdown(std::ostream& os, const std::vector<PairingReport>& reports) {
  constexpr std::array kOrder{Branch::alt, Branch::sym, Branch::cross_alt, Branch::cross_sym, Branch::rotated};
  for (Branch b : kOrder) {
    std::vector<const PairingReport*> rows;
    for (const auto& r : reports)
      if (r.branch == b) rows.push_back(&r);
    if (rows.empty()) continue;

    Table t;
    t.title = branch_title(b, rows.front()->phi);
    t.headers = {"(m,n)", "Numerical value", "Closed form", "‖", "paper target", "A variant",
                 "N", "value at 10N", "delta", "verdict", "note"};
    for (const PairingReport* r : rows) {
      t.add_row({
          text_cell("(" + std::to_string(r->m) + "," + std::to_string(r->n) + ")"),
          fixed_cell(r->quadrature_value),
          text_cell(closed_form_text(*r)),
          text_cell("‖"),
          text_cell(r->paper_target ? format_double(*r->paper_target, 'f', 10) : "-"),
          text_cell(r->a_variant ? std::string(to_string(*r->a_variant)) : "-"),
          int_cell(r->nodes_n),
          fixed_cell(r->quadrature_value_hi),
          sci_cell(r->convergence_delta),
          text_cell(render_verdict_markdown(*r)),
          text_cell(r->note),
      });
    }
    render_markdown(os, t);
  }
}

}  // namespace dualbasis::cli
