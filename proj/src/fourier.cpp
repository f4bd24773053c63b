#include "gact/fourier.hpp"

#include <algorithm>

namespace gact {

namespace {

FieldValue integer_in(const FieldRef& ctx, long long n) { return FieldValue::from_integer(ctx, n); }

bool schur_relation_holds(const RepresentationBundle& bundle, size_t psi, size_t phi, int i, int j,
                          int k, int l, int alpha) {
  const GroupRef& g = bundle.group();
  const FieldRef& e = bundle.field();
  const Irrep& rp = bundle.irreps()[psi];
  const Irrep& rq = bundle.irreps()[phi];
  FieldValue acc = FieldValue::zero(e);
  for (int b = 0; b < g->order(); ++b)
    acc = acc + rp.matrices[g->inv(b)][i][j] * rq.matrices[g->mul(b, alpha)][k][l];
  FieldValue expected = FieldValue::zero(e);
  if (psi == phi && j == k)
    expected = integer_in(e, g->order()) / integer_in(e, rp.degree) * rp.matrices[alpha][i][l];
  return acc == expected;
}

}  // namespace

BundleRef RepresentationBundle::validated(GroupRef g, FieldRef e, std::vector<Irrep> irreps,
                                          unsigned sample_seed) {
  auto bundle = std::shared_ptr<RepresentationBundle>(new RepresentationBundle());
  bundle->group_ = std::move(g);
  bundle->field_ = std::move(e);
  bundle->irreps_ = std::move(irreps);
  const GroupRef& grp = bundle->group_;
  const FieldRef& fld = bundle->field_;

  require(semisimplicity_check(*fld, grp->order()), ErrorCode::NotSemisimple,
          "bundle field characteristic divides the group order");

  long long degree_sum = 0;
  for (const Irrep& rho : bundle->irreps_) {
    require(rho.degree >= 1, ErrorCode::InputError, "irrep degree must be positive");
    require(static_cast<int>(rho.matrices.size()) == grp->order(), ErrorCode::InputError,
            "one matrix per group element required");
    for (const Matrix& mat : rho.matrices) {
      require(static_cast<int>(mat.size()) == rho.degree, ErrorCode::InputError,
              "matrix degree mismatch");
      for (const auto& row : mat)
        require(static_cast<int>(row.size()) == rho.degree, ErrorCode::InputError,
                "matrix degree mismatch");
    }
    require(mat_eq(rho.matrices[grp->identity()], identity_matrix(fld, rho.degree)),
            ErrorCode::NotHomomorphism, "identity must map to the identity matrix");
    for (int a = 0; a < grp->order(); ++a)
      for (int b = 0; b < grp->order(); ++b)
        require(mat_eq(rho.matrices[grp->mul(a, b)], mat_mul(rho.matrices[a], rho.matrices[b])),
                ErrorCode::NotHomomorphism, "matrices are not a homomorphism");
    degree_sum += static_cast<long long>(rho.degree) * rho.degree;
  }
  require(degree_sum == grp->order(), ErrorCode::WrongDegreeSum,
          "squared degrees must sum to the group order, got " + std::to_string(degree_sum));

  const size_t r = bundle->irreps_.size();
  if (grp->order() <= 8) {
    for (size_t psi = 0; psi < r; ++psi)
      for (size_t phi = 0; phi < r; ++phi) {
        int np = bundle->irreps_[psi].degree, nq = bundle->irreps_[phi].degree;
        for (int i = 0; i < np; ++i)
          for (int j = 0; j < np; ++j)
            for (int k = 0; k < nq; ++k)
              for (int l = 0; l < nq; ++l)
                for (int alpha = 0; alpha < grp->order(); ++alpha)
                  require(schur_relation_holds(*bundle, psi, phi, i, j, k, l, alpha),
                          ErrorCode::OrthogonalityFailure, "convolution orthogonality fails");
      }
  } else {
    Rng rng(sample_seed);
    for (int trial = 0; trial < 200; ++trial) {
      size_t psi = static_cast<size_t>(rng.below(static_cast<int>(r)));
      size_t phi = static_cast<size_t>(rng.below(static_cast<int>(r)));
      int np = bundle->irreps_[psi].degree, nq = bundle->irreps_[phi].degree;
      require(schur_relation_holds(*bundle, psi, phi, rng.below(np), rng.below(np), rng.below(nq),
                                   rng.below(nq), rng.below(grp->order())),
              ErrorCode::OrthogonalityFailure, "convolution orthogonality fails");
    }
  }
  return bundle;
}

BundleRef abelian_characters(const GroupRef& g, const FieldRef& e) {
  require(g->is_abelian(), ErrorCode::NotAbelian, "character bundle needs an abelian group");
  std::vector<Character> chars = homs_to_units(whole_group(g), e);
  require(static_cast<int>(chars.size()) == g->order(), ErrorCode::NoSuchRoot,
          "field lacks the roots of unity for a full character group");
  std::vector<Irrep> irreps;
  irreps.reserve(chars.size());
  for (const Character& chi : chars) {
    Irrep rho;
    rho.degree = 1;
    rho.matrices.reserve(g->order());
    for (int a = 0; a < g->order(); ++a) rho.matrices.push_back(Matrix{{chi.value_on(a)}});
    irreps.push_back(std::move(rho));
  }
  return RepresentationBundle::validated(g, e, std::move(irreps));
}

// ---------------------------------------------------------------------------
// dual set construction

namespace {

// coordinates of the module action of the group-algebra element with
// coefficient function u: (pi(u) w)(x) = sum_alpha u(alpha) w(alpha^-1 x)
std::vector<FieldValue> apply_algebra_element(const GSet& xs, const std::vector<FieldValue>& u,
                                              const std::vector<FieldValue>& w) {
  const GroupRef& g = xs.group();
  const FieldRef& e = u[0].context();
  std::vector<FieldValue> out(xs.size(), FieldValue::zero(e));
  for (int a = 0; a < g->order(); ++a) {
    if (u[a].is_zero()) continue;
    int ai = g->inv(a);
    for (int x = 0; x < xs.size(); ++x) out[x] = out[x] + u[a] * w[xs.apply(ai, x)];
  }
  return out;
}

// u^psi_(j1) as a coefficient function on the group:
// u_(ij)(alpha) = (n_psi / n) rho_ji(alpha^-1), here with i = j, j = 1
std::vector<FieldValue> matrix_unit_coefficients(const GroupRef& g, const FieldRef& e,
                                                 const Irrep& rho, int i, int j) {
  FieldValue ratio = integer_in(e, rho.degree) / integer_in(e, g->order());
  std::vector<FieldValue> u;
  u.reserve(g->order());
  for (int a = 0; a < g->order(); ++a) u.push_back(ratio * rho.matrices[g->inv(a)][j][i]);
  return u;
}

}  // namespace

DualSetRef DualSet::build(GSetRef xs, BundleRef bundle) {
  require(same_group(xs->group(), bundle->group()), ErrorCode::InputError,
          "bundle and action must share the group");
  require(semisimplicity_check(*bundle->field(), xs->group()->order()), ErrorCode::NotSemisimple,
          "dual sets need a semisimple group algebra");
  auto ds = std::shared_ptr<DualSet>(new DualSet());
  ds->gset_ = std::move(xs);
  ds->bundle_ = std::move(bundle);
  const GSet& set = *ds->gset_;
  const GroupRef& g = set.group();
  const FieldRef& e = ds->bundle_->field();
  const int m = set.size();

  for (const Irrep& rho : ds->bundle_->irreps()) {
    // image of the (1,1) matrix unit inside the function space: its dimension
    // is the multiplicity of rho in the permutation module
    std::vector<FieldValue> u11 = matrix_unit_coefficients(g, e, rho, 0, 0);
    Matrix image_cols = zero_matrix(e, m, m);
    for (int y = 0; y < m; ++y) {
      std::vector<FieldValue> delta(m, FieldValue::zero(e));
      delta[y] = FieldValue::one(e);
      std::vector<FieldValue> col = apply_algebra_element(set, u11, delta);
      for (int x = 0; x < m; ++x) image_cols[x][y] = col[x];
    }
    std::vector<int> basis_cols = pivot_columns(image_cols);

    Block block;
    block.degree = rho.degree;
    block.multiplicity = static_cast<int>(basis_cols.size());
    for (int col : basis_cols) {
      std::vector<FieldValue> w(m, FieldValue::zero(e));
      for (int x = 0; x < m; ++x) w[x] = image_cols[x][col];
      // row i of the lambda array: images of w under the matrix units u_(j1)
      std::vector<std::vector<FieldValue>> row;
      row.reserve(rho.degree);
      for (int j = 0; j < rho.degree; ++j)
        row.push_back(apply_algebra_element(set, matrix_unit_coefficients(g, e, rho, j, 0), w));
      block.lambda.push_back(std::move(row));
    }
    ds->blocks_.push_back(std::move(block));
  }
  ds->validate();
  return ds;
}

Matrix DualSet::evaluation_matrix() const {
  const int m = gset_->size();
  Matrix rows;
  rows.reserve(m);
  for (const Block& block : blocks_)
    for (const auto& row : block.lambda)
      for (const auto& lambda : row) rows.push_back(lambda);
  require(static_cast<int>(rows.size()) == m, ErrorCode::InputError,
          "dual set does not have m members");
  return rows;
}

void DualSet::validate() const {
  const GroupRef& g = gset_->group();
  const FieldRef& e = bundle_->field();
  const int m = gset_->size();

  long long total = 0;
  for (const Block& block : blocks_) total += static_cast<long long>(block.multiplicity) * block.degree;
  require(total == m, ErrorCode::InputError, "multiplicities do not add up to the point count");

  require(exact_rank(evaluation_matrix()) == m, ErrorCode::InputError,
          "dual set is not a basis of the function space");

  // transformation law: (alpha lambda)_ij = sum_k lambda_ik rho_kj(alpha)
  for (size_t b = 0; b < blocks_.size(); ++b) {
    const Block& block = blocks_[b];
    const Irrep& rho = bundle_->irreps()[b];
    for (int alpha = 0; alpha < g->order(); ++alpha) {
      int ai = g->inv(alpha);
      for (int i = 0; i < block.multiplicity; ++i)
        for (int j = 0; j < block.degree; ++j)
          for (int x = 0; x < m; ++x) {
            FieldValue lhs = block.lambda[i][j][gset_->apply(ai, x)];
            FieldValue rhs = FieldValue::zero(e);
            for (int k = 0; k < block.degree; ++k)
              rhs = rhs + block.lambda[i][k][x] * rho.matrices[alpha][k][j];
            require(lhs == rhs, ErrorCode::InputError, "transformation law fails");
          }
    }
  }
}

// ---------------------------------------------------------------------------

FourierTransform fourier_transform(const PointFunction& f, const DualSetRef& ds) {
  require(f.gset == ds->gset(), ErrorCode::InputError, "function lives on a different set");
  require(embeds_into(*f.field, *ds->field()), ErrorCode::FieldMismatch,
          "function field does not embed into the dual-set field");
  const FieldRef& e = ds->field();
  std::vector<FieldValue> fe;
  fe.reserve(f.values.size());
  for (const auto& v : f.values) fe.push_back(embed_value(v, e));

  FourierTransform ft;
  ft.dual = ds;
  for (const DualSet::Block& block : ds->blocks()) {
    Matrix coeffs = zero_matrix(e, block.multiplicity, block.degree);
    for (int i = 0; i < block.multiplicity; ++i)
      for (int j = 0; j < block.degree; ++j) {
        FieldValue acc = FieldValue::zero(e);
        for (size_t x = 0; x < fe.size(); ++x) acc = acc + fe[x] * block.lambda[i][j][x];
        coeffs[i][j] = acc;
      }
    ft.blocks.push_back(std::move(coeffs));
  }
  return ft;
}

bool equivariance_check(const PointFunction& f, const DualSetRef& ds, int trials, Rng& rng) {
  const GroupRef& g = ds->gset()->group();
  FourierTransform ft = fourier_transform(f, ds);
  auto check_one = [&](int alpha) {
    FourierTransform translated = fourier_transform(translate(alpha, f), ds);
    for (size_t b = 0; b < ft.blocks.size(); ++b) {
      const Irrep& rho = ds->bundle()->irreps()[b];
      Matrix expected = mat_mul(ft.blocks[b], rho.matrices[g->inv(alpha)]);
      if (!mat_eq(translated.blocks[b], expected)) return false;
    }
    return true;
  };
  if (g->order() <= 12) {
    for (int alpha = 0; alpha < g->order(); ++alpha)
      if (!check_one(alpha)) return false;
    return true;
  }
  for (int t = 0; t < trials; ++t)
    if (!check_one(rng.below(g->order()))) return false;
  return true;
}

int rank_support(const FourierTransform& ft) {
  int total = 0;
  for (size_t b = 0; b < ft.blocks.size(); ++b) {
    const Matrix& block = ft.blocks[b];
    if (block.empty() || block[0].empty()) continue;
    total += ft.dual->bundle()->irreps()[b].degree * exact_rank(block);
  }
  return total;
}

MinSuppWitness min_supp_witness(const FourierTransform& ft, Rng& rng, int samples) {
  const FieldRef& e = ft.dual->field();
  MinSuppWitness w;
  int expected = rank_support(ft);
  for (size_t b = 0; b < ft.blocks.size(); ++b) {
    const Matrix& block = ft.blocks[b];
    const int degree = ft.dual->bundle()->irreps()[b].degree;
    MinSuppWitness::BlockWitness bw;
    if (block.empty() || block[0].empty()) {
      bw.q = identity_matrix(e, static_cast<int>(block.size()));
      bw.p = identity_matrix(e, block.empty() ? degree : static_cast<int>(block[0].size()));
      w.per_block.push_back(std::move(bw));
      continue;
    }
    Diagonalization diag = diagonalize_to_rank_form(block, e);
    Matrix product = mat_mul(mat_mul(diag.q, block), diag.p);
    // verify the witness: exactly rank(block) ones on the diagonal
    int ones = 0;
    for (size_t i = 0; i < product.size(); ++i)
      for (size_t j = 0; j < product[i].size(); ++j) {
        if (i == j && product[i][j].is_one())
          ++ones;
        else
          require(product[i][j].is_zero(), ErrorCode::InputError,
                  "diagonalization witness is not diagonal");
      }
    require(ones == diag.rank && ones == exact_rank(block), ErrorCode::InputError,
            "witness rank mismatch");
    bw.q = std::move(diag.q);
    bw.p = std::move(diag.p);
    bw.ones = ones;
    w.weighted_count += degree * ones;
    w.per_block.push_back(std::move(bw));
  }
  require(w.weighted_count == expected, ErrorCode::InputError,
          "weighted witness count must equal the rank support");

  // random base changes can only grow the weighted support
  for (int s = 0; s < samples; ++s) {
    int sampled = 0;
    for (size_t b = 0; b < ft.blocks.size(); ++b) {
      const Matrix& block = ft.blocks[b];
      if (block.empty() || block[0].empty()) continue;
      Matrix q = random_invertible(e, static_cast<int>(block.size()), rng);
      Matrix p = random_invertible(e, static_cast<int>(block[0].size()), rng);
      sampled += ft.dual->bundle()->irreps()[b].degree * nonzero_entries(mat_mul(mat_mul(q, block), p));
    }
    require(sampled >= expected, ErrorCode::BoundViolation,
            "a base change produced fewer weighted nonzeros than the rank support");
  }
  return w;
}

bool chebotarev_minor_check(long long p, long long cap) {
  require(is_prime(p), ErrorCode::InputError, "p must be prime");
  require(p <= cap, ErrorCode::CapExceeded,
          "p exceeds the minor-enumeration cap " + std::to_string(cap));
  FieldRef ctx = FieldContext::cyclotomic(p);
  FieldValue omega = primitive_root_of_unity(ctx, p);
  const int n = static_cast<int>(p);
  Matrix fourier = zero_matrix(ctx, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      fourier[i][j] = omega.pow(static_cast<long long>(i) * j);

  // all index subsets, grouped by size
  std::vector<std::vector<std::vector<int>>> by_size(n + 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    by_size[idx.size()].push_back(std::move(idx));
  }
  for (int k = 1; k <= n; ++k) {
    for (const auto& rows : by_size[k])
      for (const auto& cols : by_size[k]) {
        Matrix minor = zero_matrix(ctx, k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) minor[i][j] = fourier[rows[i]][cols[j]];
        if (exact_det(std::move(minor), ctx).is_zero()) return false;
      }
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<FieldValue> abelian_transform(const PointFunction& f,
                                          const std::vector<Character>& chars) {
  require(f.gset->is_regular(), ErrorCode::InputError, "abelian transform works on the regular set");
  const FieldRef& e = chars.empty() ? f.field : chars[0].values[0].context();
  std::vector<FieldValue> out;
  out.reserve(chars.size());
  for (const Character& chi : chars) {
    FieldValue acc = FieldValue::zero(e);
    for (int a = 0; a < f.gset->size(); ++a)
      acc = acc + embed_value(f.values[a], e) * chi.value_on(a);
    out.push_back(acc);
  }
  return out;
}

PointFunction abelian_inverse_transform(const std::vector<FieldValue>& coeffs,
                                        const std::vector<Character>& chars, const GSetRef& regular,
                                        const FieldRef& e) {
  require(regular->is_regular(), ErrorCode::InputError, "inverse transform needs the regular set");
  const GroupRef& g = regular->group();
  require(coeffs.size() == chars.size() && static_cast<int>(chars.size()) == g->order(),
          ErrorCode::InputError, "need one coefficient per character of the full dual");
  FieldValue order_inv = FieldValue::from_integer(e, g->order()).inverse();
  std::vector<FieldValue> vals(g->order(), FieldValue::zero(e));
  for (int b = 0; b < g->order(); ++b) {
    FieldValue acc = FieldValue::zero(e);
    for (size_t c = 0; c < chars.size(); ++c)
      acc = acc + coeffs[c] * chars[c].value_on(g->inv(b));
    vals[b] = order_inv * acc;
  }
  return PointFunction(regular, e, std::move(vals));
}

}  // namespace gact
