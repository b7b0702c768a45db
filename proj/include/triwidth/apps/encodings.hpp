#pragma once

#include <functional>
#include <string>
#include <vector>

#include "triwidth/apps/tv.hpp"
#include "triwidth/mso/formula.hpp"
#include "triwidth/mso/solve.hpp"
#include "triwidth/mso/translate.hpp"

namespace triwidth::apps {

// "At least k distinct (x, c)" for x of sort `s` and c in 0..m-1, where mk(x, c) states
// that the pair counts. Pairs with equal c need distinct x.
mso::F at_least(int k, int m, const mso::Sort& s, const std::function<mso::F(const std::string&, int)>& mk,
                mso::NameGen& names);

// Sentence over the 3-dimensional triangulation signature.
mso::F taut_sentence();

// Minimise sum |V_i| - 2 sum |W^(i)_pi| over Morse matchings in dimension d.
// Free sets: V0..Vd, then W<i>_<pi> for i = 1..d and pi in lexicographic order.
mso::ExtremumProblem morse_problem(int d);
// The level-i colours pi of W variables: length i, distinct entries from 0..i.
std::vector<std::string> morse_colours(int i);

// Multiplicative evaluation problem; solutions are the admissible colourings.
// Free sets: V, E<a> per colour numerator, S<sextuple> per admissible sextuple.
mso::EvaluationProblem<Complex> tv_problem(const Triangulation& t, const Skeleton& sk, const TvTable& table);

}  // namespace triwidth::apps
