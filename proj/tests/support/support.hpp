#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "triwidth/graphs.hpp"
#include "triwidth/mso/formula.hpp"
#include "triwidth/mso/solve.hpp"
#include "triwidth/mso/structure.hpp"
#include "triwidth/skeleton.hpp"
#include "triwidth/tdecomp.hpp"
#include "triwidth/triangulation.hpp"

namespace tsupport {

using namespace triwidth;

std::string data_path(const std::string& name);
Triangulation fixture(const std::string& name);  // data/<name>.tri

// Full enumeration of every quantifier range; sets are capped at 20 elements.
// Free element variables map to an element, free set variables to a membership vector.
struct NaiveEnv {
  std::map<std::string, int> elements;
  std::map<std::string, std::vector<char>> sets;
};
bool naive_evaluate(const mso::Structure& st, const mso::F& f, NaiveEnv env = {});

// Worked examples.
mso::F three_colourability();  // sentence, graph signature
mso::F dominating_set();       // free nodeset D
mso::F independent_set();      // free nodeset A
mso::F orientability();        // sentence, d = 2

// Fixed sentence corpora for the translation checks. Coloured sentences mention
// colours 1 and 2; those mentioning colour 2 need k >= 2.
std::vector<std::string> coloured_corpus();
bool uses_colour_two(const std::string& sentence);
// Triangulation sentences for dimension d in {2, 3}.
std::vector<std::string> triangulation_corpus(int d);

// Reference evaluation of a sentence on G and of its translation on the encoding.
struct Agreement {
  bool original, translated;
};
Agreement coloured_translation(const EdgeColouredGraph& g, const std::string& sentence);
Agreement triangulation_translation(const Triangulation& t, const std::string& sentence);

// Solution counts of a free-set formula before and after translation; the second
// count also checks that every original solution maps to a translated one.
struct CountPair {
  mso::BigInt original, translated;
  bool images_satisfy = true;
};
CountPair coloured_solution_counts(const EdgeColouredGraph& g, const mso::F& f, const std::vector<mso::VarDecl>& free);
CountPair triangulation_solution_counts(const Triangulation& t, const mso::F& f,
                                        const std::vector<mso::VarDecl>& free);

// Independent oracles.
bool three_colourable_brute(int n, const std::vector<std::pair<int, int>>& arcs);
int min_dominating_brute(int n, const std::vector<std::pair<int, int>>& arcs);
bool orientable_brute(const Triangulation& t);
std::vector<int> f_vector_union_find(const Triangulation& t);

// All edge-coloured graphs on n nodes with k colours, one per isomorphism class
// (node relabellings only; colour order is part of the graph).
std::vector<EdgeColouredGraph> graphs_up_to_iso(int n, int k);
// Every triangulation on n simplices of dimension d (all partial gluings and maps).
std::vector<Triangulation> all_triangulations(int d, int n);

SimpleGraph simple_of(const EdgeColouredGraph& g);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph complete_graph(int n);

// Elapsed wall time of f() in seconds.
template <class Fn>
double seconds(Fn&& f);

}  // namespace tsupport

#include <chrono>

template <class Fn>
double tsupport::seconds(Fn&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}
