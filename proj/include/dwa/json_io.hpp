#pragma once

#include <string>

#include "dwa/algebra.hpp"

namespace dwa {

// {flavor, p, terms: [{bottom, layers, coeff}]} with the textual sequence
// form and deterministic term order, for diffable output.
std::string element_to_json(const Element& elem);

Element element_from_json(const std::string& json, const PrimeConfig& cfg);

class SplitterBimodule;

// Bimodule elements serialize as tagged D(s,n) elements:
// {side, j, shift, element}.
std::string bimodule_element_to_json(const SplitterBimodule& bm, const Element& elem);
Element bimodule_element_from_json(const SplitterBimodule& bm, const std::string& json,
                                   const PrimeConfig& cfg);

}  // namespace dwa
