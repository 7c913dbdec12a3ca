#pragma once

#include <string>

#include "tcnet/cnf.hpp"
#include "tcnet/rooted_net.hpp"
#include "tcnet/undirected_net.hpp"

namespace fixtures {

std::string path(const std::string& name);
std::string text(const std::string& name);

tcnet::UndirectedNet unrooted(const std::string& name);
tcnet::RootedNet rooted(const std::string& name);
tcnet::CnfInstance cnf(const std::string& name);

/// The formula (x ∨ ¬y ∨ z) ∧ (¬x ∨ y ∨ ¬z) ∧ (x ∨ y ∨ ¬z) ∧ (¬x ∨ ¬y ∨ z).
tcnet::CnfInstance worked_formula();

}  // namespace fixtures
