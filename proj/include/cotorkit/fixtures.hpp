#pragma once

// The worked examples: three algebras and the maps between free modules.

#include "cotorkit/module.hpp"

namespace cotorkit::fixtures {

CommutativePresentation f1_presentation();  // Q[x]/(x^2)
QuiverPresentation f2_presentation();       // one vertex, loops alpha, beta, all paths of length 2 zero
CommutativePresentation f3_presentation();  // Q[V,X,Y,Z]/I

AlgebraPtr F1();
AlgebraPtr F2();
AlgebraPtr F3();

/// Algebra element c * (generator named `name`).
Matrix gen(const AlgebraPtr& a, const std::string& name, std::int64_t c = 1);
ModulePtr free_module(const AlgebraPtr& a, std::size_t rank);
/// The map A^n -> A^m whose matrix has algebra entries: e_j |-> sum_i entries[i][j] e_i.
ModuleHom free_map(const AlgebraPtr& a, const std::vector<std::vector<Matrix>>& entries);
/// The dual map Hom(A^m, A) -> Hom(A^n, A), identified with the transposed matrix.
ModuleHom free_map_dual(const AlgebraPtr& a, const std::vector<std::vector<Matrix>>& entries);

ModulePtr S1();
ModulePtr S2();

std::vector<std::vector<Matrix>> f9_entries();   // [[x,0],[x,x]] over F1
std::vector<std::vector<Matrix>> f10_entries();  // [[v,2x],[y,z]] over F3
std::vector<std::vector<Matrix>> g10_entries();  // [[v,x],[y,z]] over F3

ModuleHom f9();
ModuleHom f10();
ModuleHom g10();
/// Im g10^* inside F3^2, generated by (v,x) and (y,z).
ModulePtr ImGstar();
/// Coker f10 and N = Im f10.
ModulePtr coker_f10();
ModulePtr im_f10();
/// Im f9 and its dual viewed as a left F1-module.
ModulePtr im_f9();
ModulePtr im_f9_dual();

}  // namespace cotorkit::fixtures
