/**
 * @file io.hpp
 * @brief Config loading, CLI argument parsing, and text/JSON rendering.
 *
 * The config file is JSON: {"labels": ["1","2"], "cartan": [[2,-2],[-1,2]],
 * "parity": ["odd","even"], "symmetrizer": [1,2]} with "symmetrizer"
 * optional.  Argument grammars: weights "2,1" (aligned with labels), label
 * sequences "1,2,1", multiplicity vectors and block lists "1:2,2:1", algebra
 * elements "x1^2*x2*t[1,2] - 1/2*t[2]".
 *
 * Malformed input throws std::invalid_argument; axiom failures surface as
 * ValidationError from the datum constructor.  All JSON rendering is
 * deterministic (sorted keys, canonical term order); big integers render as
 * JSON numbers while they fit in 53 bits and as decimal strings beyond.
 */
#pragma once

#include <superklr/basis.hpp>
#include <superklr/cartan.hpp>
#include <superklr/dimension.hpp>
#include <superklr/onh.hpp>
#include <superklr/qpi.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace superklr {

struct RawConfig {
  std::vector<std::string> labels;
  std::vector<std::vector<long>> cartan;
  std::vector<Parity> parity;
  std::optional<std::vector<long>> symmetrizer;
};

/// Read and shape-check a config file (I/O, JSON, or shape problems throw
/// std::invalid_argument; axioms are not checked here).
RawConfig read_config(const std::string& path);

/// read_config + make_superdatum (throws ValidationError on axiom failure).
CartanSuperdatum load_config(const std::string& path);

DominantWeight parse_weight(const CartanSuperdatum& datum, const std::string& text);
WeightSeq parse_weight_seq(const CartanSuperdatum& datum, const std::string& text);
RootVector parse_root_vector(const CartanSuperdatum& datum, const std::string& text);
TildeBlocks parse_blocks(const CartanSuperdatum& datum, const std::string& text);

/// Element grammar: sum of terms; a term is '*'-joined factors, each a
/// rational "3/2", a generator power "x2^3", or a crossing word "t[1,2]".
OnhElement<Rational> parse_onh_element(int n, const std::string& text);

std::string seq_text(const CartanSuperdatum& datum, const WeightSeq& nu);

nlohmann::json big_json(const BigInt& value);
nlohmann::json qpi_json(const QPiPolynomial& p);
nlohmann::json laurent_json(const LaurentPolynomial& p);

std::string onh_element_text(const OnhElement<Rational>& e);
nlohmann::json onh_element_json(const OnhElement<Rational>& e);

/// "x1^2*x3*t[2,1]" (crossings last) or "t[2,1]*x1^2*x3" (crossings first).
std::string monomial_label_text(const MonomialLabel& label, bool tau_first);
nlohmann::json monomial_label_json(const MonomialLabel& label);

}  // namespace superklr
