#include "triwidth/skeleton.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "triwidth/error.hpp"

namespace triwidth {

std::vector<int> subset_vertices(unsigned mask) {
  std::vector<int> v;
  for (int x = 0; mask >> x; ++x)
    if (mask >> x & 1u) v.push_back(x);
  return v;
}

unsigned mask_of(const std::vector<int>& vertices) {
  unsigned m = 0;
  for (int x : vertices) m |= 1u << x;
  return m;
}

std::uint64_t Skeleton::code(int s, const std::vector<int>& emb) {
  std::uint64_t c = static_cast<std::uint64_t>(s) << 44;
  for (std::size_t k = 0; k < emb.size(); ++k) c |= static_cast<std::uint64_t>(emb[k]) << (4 * k);
  return c | static_cast<std::uint64_t>(emb.size()) << 40;
}

namespace {

// Subsets of size i+1 of {0..d}, ordered lexicographically by ascending tuple.
std::vector<unsigned> subsets_lex(int d, int i) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << (d + 1)); ++m)
    if (std::popcount(m) == i + 1) out.push_back(m);
  std::sort(out.begin(), out.end(), [](unsigned a, unsigned b) { return subset_vertices(a) < subset_vertices(b); });
  return out;
}

}  // namespace

Skeleton::Skeleton(const Triangulation& t) : dim_(t.dim()), n_(t.size()) {
  const int d = dim_;
  const std::size_t width = std::size_t{1} << (d + 1);
  faces_.resize(d + 1);
  face_of_.resize(d + 1);
  inst_codes_.resize(d + 1);
  inst_begin_.resize(d + 1);
  for (int i = 0; i <= d; ++i) {
    face_of_[i].assign(static_cast<std::size_t>(n_) * width, -1);
    std::vector<std::uint64_t> codes;
    std::vector<std::size_t> begin;
    const auto order = subsets_lex(d, i);
    for (int s = 0; s < n_; ++s)
      for (unsigned m : order) {
        if (face_of_[i][s * width + m] >= 0) continue;
        Face face;
        face.dim = i;
        face.id = static_cast<int>(faces_[i].size());
        std::unordered_set<std::uint64_t> seen;
        std::deque<Instance> queue{Instance{s, subset_vertices(m)}};
        while (!queue.empty()) {
          Instance cur = std::move(queue.front());
          queue.pop_front();
          std::uint64_t c = code(cur.simplex, cur.emb);
          if (!seen.insert(c).second) continue;
          int& slot = face_of_[i][cur.simplex * width + mask_of(cur.emb)];
          if (slot >= 0) self_identified_ = true;  // second embedding of one subset
          slot = face.id;
          unsigned image = mask_of(cur.emb);
          for (int f = 0; f <= d; ++f) {
            if (image >> f & 1u || !t.glued(cur.simplex, f)) continue;
            const Perm& p = t.partner_map(cur.simplex, f);
            Instance next{t.partner_simplex(cur.simplex, f), {}};
            for (int x : cur.emb) next.emb.push_back(p[x]);
            queue.push_back(std::move(next));
          }
          face.instances.push_back(std::move(cur));
        }
        begin.push_back(codes.size());
        std::vector<std::uint64_t> sorted(seen.begin(), seen.end());
        std::sort(sorted.begin(), sorted.end());
        codes.insert(codes.end(), sorted.begin(), sorted.end());
        faces_[i].push_back(std::move(face));
      }
    begin.push_back(codes.size());
    inst_codes_[i] = std::move(codes);
    inst_begin_[i] = std::move(begin);
  }
}

std::vector<int> Skeleton::f_vector() const {
  std::vector<int> f;
  for (const auto& level : faces_) f.push_back(static_cast<int>(level.size()));
  return f;
}

int Skeleton::total_faces() const {
  int total = 0;
  for (const auto& level : faces_) total += static_cast<int>(level.size());
  return total;
}

long long Skeleton::euler_characteristic() const {
  long long chi = 0;
  for (int i = 0; i <= dim_; ++i) chi += (i % 2 ? -1 : 1) * static_cast<long long>(faces_[i].size());
  return chi;
}

int Skeleton::face_of(int i, int s, unsigned mask) const {
  return face_of_[i][static_cast<std::size_t>(s) * (std::size_t{1} << (dim_ + 1)) + mask];
}

bool Skeleton::has_instance(int i, int f, int s, const std::vector<int>& emb) const {
  auto first = inst_codes_[i].begin() + inst_begin_[i][f];
  auto last = inst_codes_[i].begin() + inst_begin_[i][f + 1];
  return std::binary_search(first, last, code(s, emb));
}

int Skeleton::face_with_instance(int s, const std::vector<int>& emb) const {
  const int i = static_cast<int>(emb.size()) - 1;
  if (i < 0 || i > dim_ || s < 0 || s >= n_) return -1;
  int f = face_of(i, s, mask_of(emb));
  return f >= 0 && has_instance(i, f, s, emb) ? f : -1;
}

bool Skeleton::subface_holds(int i, int f, const std::vector<int>& pi, int j, int g) const {
  if (i < 0 || j > dim_ || i >= j) throw DimensionError("subface relation needs 0 <= dim f < dim g <= d");
  if (f < 0 || f >= static_cast<int>(faces_[i].size()) || g < 0 || g >= static_cast<int>(faces_[j].size()))
    throw DimensionError("face id out of range");
  if (static_cast<int>(pi.size()) != i + 1) throw DimensionError("label sequence length must be dim f + 1");
  unsigned used = 0;
  for (int x : pi) {
    if (x < 0 || x > j || used >> x & 1u) throw DimensionError("labels must be distinct and within 0..dim g");
    used |= 1u << x;
  }
  for (const Instance& inst : faces_[j][g].instances) {
    std::vector<int> emb;
    for (int x : pi) emb.push_back(inst.emb[x]);
    if (has_instance(i, f, inst.simplex, emb)) return true;
  }
  return false;
}

}  // namespace triwidth
