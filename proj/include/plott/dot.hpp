#pragma once

#include <string>

#include "plott/family.hpp"
#include "plott/order.hpp"
#include "plott/wordset.hpp"

namespace plott {

/// Deterministic DOT text for the Hasse diagram of a structure: nodes in
/// canonical order with stable identifiers, edges restricted to covering
/// pairs, drawn from the greater to the smaller element. Structures over
/// 2000 nodes raise capacity_error.

std::string export_dot(const PartialOrder& order);
std::string export_dot(const ConvexFamily& family);
std::string export_dot(const WordSet& words);

}  // namespace plott
