#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eds/cartan.hpp"
#include "eds/curvature.hpp"
#include "eds/ideal.hpp"

namespace eds {

/// Parsed exterior-system description.  The canonical text layout is
///
///   eds 1
///   dim 3
///   coframe w1 w2 w3
///   aux NAME value FORM diff FORM
///   d 3 = 1/1*w1^w2
///   generator 1/1*w3
///   vector 1/1 0/1 0/1
///   split 1 2 | 3
///
/// with '#' comments and blank lines ignored on input.  Forms are sums of
/// num/den*name^name... terms joined by " + " or " - "; "0" is the zero
/// form.  parse/serialize round-trip canonical documents byte-identically.
struct EdsDocument {
  SpacePtr space;
  StructureDifferential sd;
  std::vector<Form> generators;
  std::optional<std::vector<Vector>> flag;
  std::optional<CoframeSplit> split;
};

EdsDocument parse_document(const std::string& text);
std::string serialize_document(const EdsDocument& doc);

/// Form literal over a given space; `line` seeds parse_error positions.
Form parse_form_literal(const SpacePtr& space, const std::string& text, int line = 0);
std::string form_literal(const Form& f);

/// Curvature tensor file: "riemann 1", "m 2", then independent components
/// as "R i j k l = num/den"; the symmetry orbit of every listed entry is
/// completed on load and conflicts are rejected.
RiemannTensor load_riemann(const std::string& text);
std::string serialize_riemann(const RiemannTensor& r);

/// Second-fundamental-form file: "h 1", "m 2", "N 3", entries
/// "h a i j = num/den" (symmetric in i, j).
SecondFundamentalForm load_h(const std::string& text);
std::string serialize_h(const SecondFundamentalForm& h);

/// Input for the Cartan lemma solver: a coframe plus matching lists of
/// theta and omega 1-forms.
struct CartanLemmaDocument {
  SpacePtr space;
  std::vector<Form> theta;
  std::vector<Form> omega;
};

CartanLemmaDocument parse_cartan_lemma_document(const std::string& text);

}  // namespace eds
