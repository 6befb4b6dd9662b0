#pragma once

#include "quiverlab/bound_quiver.hpp"

// Brute-force reference implementations used to check the graded engine.
// These enumerate full path spaces and reduce relation multiples by plain
// echelon elimination, so they are exponential but obviously correct.
namespace quiverlab::oracle {

// dim of the (source -> target, degree) component of the path algebra modulo
// the two-sided ideal generated by the relations.
int block_dim(const BoundQuiver& bq, int source, int target, int degree);

long long degree_dim(const BoundQuiver& bq, int degree);

}  // namespace quiverlab::oracle
