use crate::arith::{is_prime, primitive_root};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permgroup::{Permutation, PermutationGroup};

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn checked(group: PermutationGroup, expected: u128, what: &str) -> Result<PermutationGroup> {
    let order = group.order();
    if order != expected {
        return Err(Error::Inconsistent(format!("{what}: expected order {expected}, got {order}")));
    }
    Ok(group)
}

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::from_images(images).expect("constructed images are bijective")
}

/// Standard generators of `Sym(n)`: a transposition and an `n`-cycle.
fn sym_generators(n: usize) -> Vec<Permutation> {
    match n {
        0 | 1 => Vec::new(),
        2 => vec![perm(vec![1, 0])],
        _ => vec![
            perm((0..n).map(|i| [1, 0].get(i).copied().unwrap_or(i)).collect()),
            perm((0..n).map(|i| (i + 1) % n).collect()),
        ],
    }
}

pub fn sym(n: usize) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(Error::EmptyDegree);
    }
    checked(PermutationGroup::new(n, sym_generators(n))?, factorial(n), "sym")
}

pub fn alt(n: usize) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(Error::EmptyDegree);
    }
    let gens: Vec<Permutation> =
        (2..n).map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]).expect("valid cycle")).collect();
    checked(PermutationGroup::new(n, gens)?, factorial(n).div_ceil(2).max(1), "alt")
}

pub fn cyclic(n: usize) -> Result<PermutationGroup> {
    if n == 0 {
        return Err(Error::EmptyDegree);
    }
    let gens = if n == 1 { Vec::new() } else { vec![perm((0..n).map(|i| (i + 1) % n).collect())] };
    checked(PermutationGroup::new(n, gens)?, n as u128, "cyclic")
}

/// Symmetries of the `n`-gon on its vertices `0..n`.
pub fn dihedral(n: usize) -> Result<PermutationGroup> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("dihedral needs n >= 3, got {n}")));
    }
    let gens = vec![perm((0..n).map(|i| (i + 1) % n).collect()), perm((0..n).map(|i| (n - i) % n).collect())];
    checked(PermutationGroup::new(n, gens)?, 2 * n as u128, "dihedral")
}

/// `Sₙ × Sₘ` on grid vertices `(i, j) ↦ (i−1)·m + (j−1)`, rows and columns
/// permuted independently.
pub fn grid_product(n: usize, m: usize) -> Result<PermutationGroup> {
    let mut gens = Vec::new();
    for h in sym_generators(n) {
        gens.push(perm((0..n * m).map(|v| h.apply(v / m) * m + v % m).collect()));
    }
    for h in sym_generators(m) {
        gens.push(perm((0..n * m).map(|v| (v / m) * m + h.apply(v % m)).collect()));
    }
    checked(PermutationGroup::new(n * m, gens)?, factorial(n) * factorial(m), "grid product")
}

/// Natural symmetry of the grid: `Sₙ × Sₘ`, with the transpose added when `n = m`.
pub(crate) fn grid_symmetry(n: usize, m: usize) -> PermutationGroup {
    let base = grid_product(n, m).expect("grid parameters validated");
    if n != m {
        return base;
    }
    let mut gens = base.generators().to_vec();
    gens.push(perm((0..n * n).map(|v| (v % n) * n + v / n).collect()));
    PermutationGroup::new(n * n, gens).expect("same degree")
}

/// `⟨row swap⟩ × H` on the `2m` grid vertices, `H` acting on columns.
pub fn row_swap_times(h: &PermutationGroup) -> Result<PermutationGroup> {
    let m = h.degree();
    let mut gens = vec![perm((0..2 * m).map(|v| (v + m) % (2 * m)).collect())];
    for g in h.generators() {
        gens.push(perm((0..2 * m).map(|v| (v / m) * m + g.apply(v % m)).collect()));
    }
    checked(PermutationGroup::new(2 * m, gens)?, 2 * h.order(), "row swap product")
}

/// `S₂ × Sₘ` on the vertices of the 2×m grid complement.
pub fn wreath_grid(m: usize) -> Result<PermutationGroup> {
    row_swap_times(&sym(m)?)
}

/// `Sₘ × Sₙ` on `K_{m,n}` (parts `0..m` and `m..m+n`), with the part swap when `m = n`.
pub(crate) fn bipartite_symmetry(m: usize, n: usize) -> PermutationGroup {
    let mut gens = Vec::new();
    for h in sym_generators(m) {
        gens.push(perm((0..m + n).map(|v| if v < m { h.apply(v) } else { v }).collect()));
    }
    for h in sym_generators(n) {
        gens.push(perm((0..m + n).map(|v| if v < m { v } else { m + h.apply(v - m) }).collect()));
    }
    if m == n {
        gens.push(perm((0..2 * m).map(|v| (v + m) % (2 * m)).collect()));
    }
    PermutationGroup::new(m + n, gens).expect("same degree")
}

/// `Sₘ ≀ S₂`, the full automorphism group of `K_{m,m}`.
pub fn wreath_bipartite(m: usize) -> Result<PermutationGroup> {
    if m == 0 {
        return Err(Error::EmptyDegree);
    }
    checked(bipartite_symmetry(m, m), 2 * factorial(m) * factorial(m), "wreath bipartite")
}

fn digits(x: usize, d: usize, q: usize) -> Vec<usize> {
    (0..d).rev().map(|i| (x / q.pow(i as u32)) % q).collect()
}

fn undigits(a: &[usize], q: usize) -> usize {
    a.iter().fold(0, |acc, &x| acc * q + x)
}

/// Permutation of tuples given by moving coordinate `i` to `h(i)`.
fn coordinate_action(h: &Permutation, d: usize, q: usize) -> Permutation {
    perm(
        (0..q.pow(d as u32))
            .map(|x| {
                let a = digits(x, d, q);
                let mut b = vec![0; d];
                for i in 0..d {
                    b[h.apply(i)] = a[i];
                }
                undigits(&b, q)
            })
            .collect(),
    )
}

/// Alphabet permutation `s` applied in coordinate `i`.
fn letter_action(s: &Permutation, i: usize, d: usize, q: usize) -> Permutation {
    perm(
        (0..q.pow(d as u32))
            .map(|x| {
                let mut a = digits(x, d, q);
                a[i] = s.apply(a[i]);
                undigits(&a, q)
            })
            .collect(),
    )
}

/// `S_q ≀ S_d`, the full automorphism group of `H(d, q)`.
pub(crate) fn hamming_full(d: usize, q: usize) -> Result<PermutationGroup> {
    let mut gens: Vec<Permutation> = sym_generators(q).iter().map(|s| letter_action(s, 0, d, q)).collect();
    gens.extend(sym_generators(d).iter().map(|h| coordinate_action(h, d, q)));
    let order = factorial(q).pow(d as u32) * factorial(d);
    checked(PermutationGroup::new(q.pow(d as u32), gens)?, order, "hamming")
}

/// `S₂ ≀ H` on `H(d, 2)`: every coordinate flip, and `H` permuting coordinates.
pub fn wreath_hamming(h: &PermutationGroup, d: usize) -> Result<PermutationGroup> {
    if h.degree() != d {
        return Err(Error::DegreeMismatch { expected: d, found: h.degree() });
    }
    if d < 2 {
        return Err(Error::InvalidParameter(format!("wreath_hamming needs d >= 2, got {d}")));
    }
    let flip = perm(vec![1, 0]);
    let mut gens: Vec<Permutation> = (0..d).map(|i| letter_action(&flip, i, d, 2)).collect();
    gens.extend(h.generators().iter().map(|g| coordinate_action(g, d, 2)));
    checked(PermutationGroup::new(1 << d, gens)?, (1u128 << d) * h.order(), "wreath hamming")
}

/// `S₂ ≀ S₃` on the octahedron labeling `a, b, c, a′, b′, c′`.
pub fn octahedral() -> PermutationGroup {
    let gens = vec![perm(vec![3, 1, 2, 0, 4, 5]), perm(vec![1, 2, 0, 4, 5, 3]), perm(vec![1, 0, 2, 4, 3, 5])];
    checked(PermutationGroup::new(6, gens).expect("degree 6"), 48, "octahedral").expect("order 48")
}

const ICOSAHEDRON_ROT5: [usize; 12] = [0, 2, 3, 4, 5, 1, 7, 8, 9, 10, 6, 11];
const ICOSAHEDRON_ROT3: [usize; 12] = [1, 2, 0, 5, 6, 7, 8, 3, 4, 10, 11, 9];
const ICOSAHEDRON_ANTIPODE: [usize; 12] = [11, 9, 10, 6, 7, 8, 3, 4, 5, 1, 2, 0];

/// Rotation group `A₅` on the icosahedron labeling `u, v₁..v₅, w₁..w₅, x`.
pub fn icosahedral_rotations() -> PermutationGroup {
    let gens = vec![perm(ICOSAHEDRON_ROT5.to_vec()), perm(ICOSAHEDRON_ROT3.to_vec())];
    checked(PermutationGroup::new(12, gens).expect("degree 12"), 60, "icosahedral rotations").expect("order 60")
}

/// `S₂ × A₅`: rotations and the antipodal map.
pub fn icosahedral() -> PermutationGroup {
    let mut gens = icosahedral_rotations().generators().to_vec();
    gens.push(perm(ICOSAHEDRON_ANTIPODE.to_vec()));
    checked(PermutationGroup::new(12, gens).expect("degree 12"), 120, "icosahedral").expect("order 120")
}

fn require_prime(p: usize) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    Ok(())
}

/// `AGL(1, p) = ⟨x ↦ x+1, x ↦ gx⟩` with `g` the smallest primitive root.
pub fn agl1(p: usize) -> Result<PermutationGroup> {
    require_prime(p)?;
    let g = primitive_root(p as u64) as usize;
    let gens = vec![perm((0..p).map(|x| (x + 1) % p).collect()), perm((0..p).map(|x| (g * x) % p).collect())];
    checked(PermutationGroup::new(p, gens)?, (p * (p - 1)) as u128, "agl1")
}

/// Index-2 subgroup of `AGL(1, p)` of odd order: multipliers are the squares.
pub fn two_homog_frobenius(p: usize) -> Result<PermutationGroup> {
    require_prime(p)?;
    if p % 4 != 3 {
        return Err(Error::InvalidParameter(format!(
            "p = {p} is not 3 mod 4; a 2-homogeneous group that is not 2-transitive needs degree congruent to 3 mod 4"
        )));
    }
    let g = primitive_root(p as u64) as usize;
    let g2 = g * g % p;
    let gens = vec![perm((0..p).map(|x| (x + 1) % p).collect()), perm((0..p).map(|x| (g2 * x) % p).collect())];
    checked(PermutationGroup::new(p, gens)?, (p * (p - 1) / 2) as u128, "two_homog_frobenius")
}

/// `PSL(2, 5)` on the projective line: points `0..5` are field elements, `5` is ∞.
pub fn psl2_5() -> PermutationGroup {
    let t = perm(vec![1, 2, 3, 4, 0, 5]);
    // x ↦ −1/x
    let s = perm(vec![5, 4, 2, 3, 1, 0]);
    checked(PermutationGroup::new(6, vec![t, s]).expect("degree 6"), 60, "psl2_5").expect("order 60")
}

/// 2-subsets of `0..n` in lexicographic order.
pub fn two_subsets(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// `S₅` acting on the ten 2-subsets of `{1..5}`, the Petersen labeling.
pub fn petersen_s5() -> PermutationGroup {
    let pairs = two_subsets(5);
    let on_pairs = |g: &Permutation| {
        perm(
            pairs
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (g.apply(a), g.apply(b));
                    pairs.iter().position(|&q| q == (x.min(y), x.max(y))).expect("pair")
                })
                .collect(),
        )
    };
    let gens = sym_generators(5).iter().map(on_pairs).collect();
    checked(PermutationGroup::new(10, gens).expect("degree 10"), 120, "petersen S5").expect("order 120")
}

/// Action of vertex automorphisms on the lexicographic edge list of `g`.
pub fn induced_on_edges(g: &Graph, gens: &[Permutation]) -> Vec<Permutation> {
    let edges = g.edges();
    gens.iter()
        .map(|p| {
            perm(
                edges
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (p.apply(a), p.apply(b));
                        edges.binary_search(&(x.min(y), x.max(y))).expect("automorphism maps edges to edges")
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Group induced on the line graph of `g` by a vertex group of `g`.
pub fn line_group(g: &Graph, group: &PermutationGroup) -> Result<PermutationGroup> {
    if let Some(index) = group.generators().iter().position(|p| !g.is_automorphism(p)) {
        return Err(Error::NotAutomorphism { index });
    }
    PermutationGroup::new(g.edge_count(), induced_on_edges(g, group.generators()))
}
