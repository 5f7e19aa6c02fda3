//! Deterministic replay of every module invariant suite.
//!
//! All randomness flows from a single seed, so identical configurations
//! produce byte-identical reports. On failure, the first counterexample is
//! recorded verbatim.

use klein_braid::buc::{
    classify, generate_witness, mu_ab, nu_ab, obstruction_check_type2, obstruction_check_type4,
    odd_part, val2, verify_witness, xi, Witness,
};
use klein_braid::kerg::{
    abelianize, b_to_gamma, c_ab, c_pq, closed_i_ab, closed_i_word, closed_j_ab, closed_j_word,
    closed_o_ab, closed_t_ab, closed_t_word, conj_data_c, conj_data_rho, conj_data_theta,
    from_b_basis, gamma_to_b, in_kerg, rho_ab, rs_rewrite, theta_ab, to_b_basis, AbKerG,
    BBasisWord, BFactor,
};
use klein_braid::p2::{l_sigma, rho, sigma_sq, theta, theta_q, P2Elem};
use klein_braid::pi1k::{g_word, normalize_hom, HomNormalForm, HomPair, Pi1K};
use klein_braid::word::{apply_endo, conj, delta, eps, word_b, word_bkl, FreeWord, Gen, Syllable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Configuration: the seed, the number of randomised cases per suite, and
/// the grid bounds (defaulting to the bounds the invariants are stated at).
#[derive(Debug, Clone)]
pub struct SelftestConfig {
    pub seed: u64,
    pub cases: u32,
    /// `|k|, |l|` sweep for basis-word identities.
    pub word_grid: i64,
    /// Exhaustive bound for `Z ⋊ Z` group laws.
    pub pi_grid: i64,
    /// `|k|` (and `|l|`) sweep for the T/I/O/J closed forms.
    pub closed_grid: i64,
    /// `|k|, |l|` sweep for the word-level J closed form.
    pub j_grid: i64,
    /// Parameter sweep for the explicit-conjugator identities.
    pub conj_grid: i64,
    /// Basis sweep for the obstruction kernel checks.
    pub obstruction_grid: i64,
    /// `s1, s2` range for the witness grid.
    pub witness_s_grid: i64,
    /// `r1` (and `|r2|`) range for the witness grid.
    pub witness_r_grid: i64,
}

impl Default for SelftestConfig {
    fn default() -> SelftestConfig {
        SelftestConfig {
            seed: 42,
            cases: 200,
            word_grid: 8,
            pi_grid: 3,
            closed_grid: 6,
            j_grid: 4,
            conj_grid: 3,
            obstruction_grid: 8,
            witness_s_grid: 3,
            witness_r_grid: 8,
        }
    }
}

/// Outcome of one suite: check count, plus the first counterexample if any.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: u64,
    pub failure: Option<String>,
}

struct Suite {
    checks: u64,
    failure: Option<String>,
}

impl Suite {
    fn new() -> Suite {
        Suite {
            checks: 0,
            failure: None,
        }
    }

    fn check<F: FnOnce() -> String>(&mut self, ok: bool, case: F) -> bool {
        if self.failure.is_some() {
            return false;
        }
        self.checks += 1;
        if !ok {
            self.failure = Some(case());
        }
        ok
    }

    fn finish(self, name: &'static str) -> SuiteOutcome {
        SuiteOutcome {
            name,
            checks: self.checks,
            failure: self.failure,
        }
    }
}

fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    FreeWord::from_syllables((0..len).map(|_| Syllable {
        gen: if rng.gen() { Gen::U } else { Gen::V },
        exp: if rng.gen() { 1 } else { -1 },
    }))
}

fn random_kernel_word<R: Rng>(rng: &mut R, max_factors: usize, bound: i64) -> FreeWord {
    let n = rng.gen_range(0..=max_factors);
    let mut acc = FreeWord::identity();
    for _ in 0..n {
        let k = rng.gen_range(-bound..=bound);
        let l = rng.gen_range(-bound..=bound);
        acc = acc.mul(&word_bkl(k, l).pow(if rng.gen() { 1 } else { -1 }));
    }
    acc
}

fn random_pi1k<R: Rng>(rng: &mut R, bound: i64) -> Pi1K {
    Pi1K::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

fn random_p2<R: Rng>(rng: &mut R, max_len: usize, bound: i64) -> P2Elem {
    P2Elem::new(random_word(rng, max_len), random_pi1k(rng, bound))
}

fn suite_word(cfg: &SelftestConfig) -> SuiteOutcome {
    let mut s = Suite::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    // Reduction canonicity against one-letter-at-a-time cancellation.
    for _ in 0..cfg.cases {
        let letters: Vec<(Gen, i64)> = (0..rng.gen_range(0..=64))
            .map(|_| {
                (
                    if rng.gen() { Gen::U } else { Gen::V },
                    if rng.gen() { 1 } else { -1 },
                )
            })
            .collect();
        let mut stack: Vec<(Gen, i64)> = Vec::new();
        for &(g, sign) in &letters {
            match stack.last() {
                Some(&(tg, ts)) if tg == g && ts == -sign => {
                    stack.pop();
                }
                _ => stack.push((g, sign)),
            }
        }
        let w = FreeWord::from_syllables(letters.iter().map(|&(gen, exp)| Syllable { gen, exp }));
        s.check(w.letters().collect::<Vec<_>>() == stack, || {
            format!("reduction mismatch on letter stream {letters:?}")
        });
        let again = FreeWord::from_syllables(w.syllables().iter().copied());
        s.check(again == w, || format!("reduction not idempotent on {w}"));
    }
    // Group laws, exhaustively for words of length <= 3.
    let letters = [(Gen::U, 1i64), (Gen::U, -1), (Gen::V, 1), (Gen::V, -1)];
    let mut words = vec![FreeWord::identity()];
    let mut layer = vec![FreeWord::identity()];
    for _ in 0..3 {
        let mut next = Vec::new();
        for w in &layer {
            for &(gen, exp) in &letters {
                next.push(w.mul(&FreeWord::gen_pow(gen, exp)));
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words.sort_by_key(|w| format!("{w}"));
    words.dedup();
    'laws: for a in &words {
        for b in &words {
            if !s.check(a.mul(b).inv() == b.inv().mul(&a.inv()), || {
                format!("antihomomorphism of inverse fails for {a}, {b}")
            }) {
                break 'laws;
            }
            for c in &words {
                if !s.check(a.mul(b).mul(c) == a.mul(&b.mul(c)), || {
                    format!("associativity fails for {a}, {b}, {c}")
                }) {
                    break 'laws;
                }
            }
        }
    }
    // apply_endo is a homomorphism.
    for _ in 0..cfg.cases {
        let iu = random_word(&mut rng, 8);
        let iv = random_word(&mut rng, 8);
        let a = random_word(&mut rng, 10);
        let b = random_word(&mut rng, 10);
        s.check(
            apply_endo(&iu, &iv, &a.mul(&b))
                == apply_endo(&iu, &iv, &a).mul(&apply_endo(&iu, &iv, &b)),
            || format!("endo not multiplicative on {a}, {b}"),
        );
    }
    // B_{k,l} agrees with conjugation.
    for k in -cfg.word_grid..=cfg.word_grid {
        for l in -cfg.word_grid..=cfg.word_grid {
            let prefix = FreeWord::gen_pow(Gen::V, k).mul(&FreeWord::gen_pow(Gen::U, l));
            s.check(word_bkl(k, l) == conj(&prefix, &word_b()), || {
                format!("B_{{{k},{l}}} is not the conjugate of B")
            });
        }
    }
    s.finish("word")
}

fn suite_pi1k(cfg: &SelftestConfig) -> SuiteOutcome {
    let mut s = Suite::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 1);
    let bound = cfg.pi_grid;
    let mut elems = Vec::new();
    for m in -bound..=bound {
        for n in -bound..=bound {
            elems.push(Pi1K::new(m, n));
        }
    }
    'laws: for &a in &elems {
        if !s.check(a.mul(a.inv()) == Pi1K::IDENTITY, || {
            format!("inverse fails for {a}")
        }) {
            break 'laws;
        }
        for &b in &elems {
            for &c in &elems {
                if !s.check(a.mul(b).mul(c) == a.mul(b.mul(c)), || {
                    format!("associativity fails for {a}, {b}, {c}")
                }) {
                    break 'laws;
                }
            }
        }
    }
    for _ in 0..cfg.cases {
        let a = random_word(&mut rng, 12);
        let b = random_word(&mut rng, 12);
        s.check(g_word(&a.mul(&b)) == g_word(&a).mul(g_word(&b)), || {
            format!("g not multiplicative on {a}, {b}")
        });
    }
    // Normalization: shape, conjugator, idempotence.
    for _ in 0..cfg.cases {
        let h = loop {
            if let Ok(h) = HomPair::new(random_pi1k(&mut rng, 6), random_pi1k(&mut rng, 6)) {
                break h;
            }
        };
        let (nf, c) = normalize_hom(&h);
        let shape_ok = match nf {
            HomNormalForm::Type1 { i, .. }
            | HomNormalForm::Type2 { i, .. }
            | HomNormalForm::Type3 { i, .. } => i == 0 || i == 1,
            HomNormalForm::Type4 { r1, r2, .. } => r1 >= 0 && (r1 > 0 || r2 >= 0),
        };
        s.check(shape_ok, || format!("bad normal form {nf:?} for {h:?}"));
        let target = nf.pair();
        s.check(
            c.conj(h.f10()) == target.f10() && c.conj(h.f01()) == target.f01(),
            || format!("conjugator {c} does not normalize {h:?}"),
        );
        let (nf2, c2) = normalize_hom(&target);
        s.check(nf2 == nf && c2 == Pi1K::IDENTITY, || {
            format!("normalization not idempotent on {nf:?}")
        });
    }
    // h is an isomorphism and swaps i on Type-1 forms.
    use klein_braid::pi1k::{h_iso, h_iso_inv};
    for _ in 0..cfg.cases {
        let a = random_pi1k(&mut rng, 8);
        let b = random_pi1k(&mut rng, 8);
        s.check(h_iso(a.mul(b)) == h_iso(a).mul(h_iso(b)), || {
            format!("h not multiplicative on {a}, {b}")
        });
        s.check(h_iso_inv(h_iso(a)) == a, || {
            format!("h inverse fails on {a}")
        });
    }
    for s1 in -2..=2 {
        for s2 in -2..=2 {
            let nf = HomNormalForm::Type1 { i: 0, s1, s2 };
            let h = nf.pair();
            let mapped = HomPair::new(h_iso(h.f10()), h_iso(h.f01())).unwrap();
            let (nf2, _) = normalize_hom(&mapped);
            s.check(nf2 == HomNormalForm::Type1 { i: 1, s1, s2 }, || {
                format!("h does not preserve Type 1 at s1={s1}, s2={s2}")
            });
        }
    }
    s.finish("pi1k")
}

fn suite_p2(cfg: &SelftestConfig) -> SuiteOutcome {
    let mut s = Suite::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 2);
    for _ in 0..cfg.cases {
        let q1 = random_pi1k(&mut rng, 4);
        let q2 = random_pi1k(&mut rng, 4);
        let w = random_word(&mut rng, 10);
        s.check(
            theta_q(q1.mul(q2), &w) == theta_q(q1, &theta_q(q2, &w)),
            || format!("theta action law fails at {q1}, {q2} on {w}"),
        );
        s.check(
            theta(q1.m, q1.n, &w) == theta(q1.m, delta(q1.n), &w),
            || format!("theta parity dependence fails at {q1} on {w}"),
        );
        s.check(
            theta(q1.m, q1.n, &word_b()) == word_b().pow(eps(q1.n)),
            || format!("theta(B) != B^eps at {q1}"),
        );
        let a = random_p2(&mut rng, 8, 3);
        let b = random_p2(&mut rng, 8, 3);
        let c = random_p2(&mut rng, 8, 3);
        s.check(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), || {
            format!("P2 associativity fails at {a}, {b}, {c}")
        });
        s.check(a.mul(&a.inv()) == P2Elem::identity(), || {
            format!("P2 inverse fails at {a}")
        });
        s.check(l_sigma(&a.mul(&b)) == l_sigma(&a).mul(&l_sigma(&b)), || {
            format!("l_sigma not multiplicative at {a}, {b}")
        });
        s.check(
            l_sigma(&l_sigma(&a)) == sigma_sq().mul(&a).mul(&sigma_sq().inv()),
            || format!("l_sigma squared is not conjugation by sigma^2 at {a}"),
        );
        s.check(
            l_sigma(&P2Elem::new(w.clone(), Pi1K::IDENTITY)) == P2Elem::new(rho(&w), g_word(&w)),
            || format!("l_sigma(w;0,0) != (rho(w); g(w)) at {w}"),
        );
        let kw = random_kernel_word(&mut rng, 4, 3);
        let z = random_word(&mut rng, 8);
        s.check(rho(&kw.mul(&z)) == rho(&kw).mul(&rho(&z)), || {
            format!("rho restriction rule fails at {kw}, {z}")
        });
        s.check(
            l_sigma(&P2Elem::new(kw.clone(), Pi1K::IDENTITY)).p1_sharp() == Pi1K::IDENTITY,
            || format!("l_sigma leaves the kernel fiber at {kw}"),
        );
    }
    // Closed forms.
    let b = word_b();
    for t in -5i64..=5 {
        let lhs = l_sigma(&P2Elem::new(FreeWord::gen_pow(Gen::U, t), Pi1K::IDENTITY));
        let rhs = P2Elem::new(
            b.mul(&FreeWord::u().inv()).pow(t).mul(&b.pow(-t)),
            Pi1K::new(t, 0),
        );
        s.check(lhs == rhs, || format!("closed form for u^{t} fails"));
        let lhs = l_sigma(&P2Elem::new(FreeWord::gen_pow(Gen::V, t), Pi1K::IDENTITY));
        let rhs = P2Elem::new(
            FreeWord::u()
                .mul(&FreeWord::v())
                .pow(-t)
                .mul(&FreeWord::u().mul(&b).pow(delta(t))),
            Pi1K::new(0, t),
        );
        s.check(lhs == rhs, || format!("closed form for v^{t} fails"));
        let a = P2Elem::new(FreeWord::identity(), Pi1K::new(t, 0));
        s.check(l_sigma(&a) == a, || {
            format!("closed form for (1;{t},0) fails")
        });
        let lhs = l_sigma(&P2Elem::new(FreeWord::identity(), Pi1K::new(0, t)));
        s.check(lhs == P2Elem::new(b.pow(delta(t)), Pi1K::new(0, t)), || {
            format!("closed form for (1;0,{t}) fails")
        });
    }
    s.finish("p2")
}

fn suite_kerg(cfg: &SelftestConfig) -> SuiteOutcome {
    let mut s = Suite::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 3);
    // Round trips and Reidemeister-Schreier reconstruction.
    for _ in 0..cfg.cases {
        let n = rng.gen_range(0..=12);
        let bw = BBasisWord::from_factors((0..n).map(|_| BFactor {
            k: rng.gen_range(-5..=5),
            l: rng.gen_range(-5..=5),
            exp: if rng.gen() { 1 } else { -1 },
        }));
        let w = from_b_basis(&bw);
        s.check(in_kerg(&w), || format!("basis word {bw} left the kernel"));
        s.check(to_b_basis(&w) == Ok(bw.clone()), || {
            format!("round trip failed for {bw}")
        });
        let gammas = match rs_rewrite(&w) {
            Ok(g) => g,
            Err(e) => {
                s.check(false, || format!("rewrite failed on {w}: {e}"));
                break;
            }
        };
        let mut acc = FreeWord::identity();
        for g in &gammas {
            acc = acc.mul(&g.word());
            s.check(from_b_basis(&gamma_to_b(g)) == g.word(), || {
                format!("gamma expansion mismatch for {g:?}")
            });
        }
        s.check(acc == w, || {
            format!("gamma product does not reconstruct {w}")
        });
    }
    for k in -4i64..=4 {
        for l in -4i64..=4 {
            let mut prod = FreeWord::identity();
            for g in b_to_gamma(k, l) {
                prod = prod.mul(&g.word());
            }
            s.check(prod == word_bkl(k, l), || {
                format!(
                    "B_{{{k},{l}}} != Gamma_{{{k},{}}} Gamma_{{{k},{l}}}^-1",
                    l + 1
                )
            });
        }
    }
    // Closed forms.
    let g = cfg.closed_grid;
    for k in -g..=g {
        for r in 0i64..=1 {
            s.check(
                from_b_basis(&closed_t_word(k, r)) == klein_braid::kerg::special_t(k, r),
                || format!("T word closed form fails at k={k}, r={r}"),
            );
            s.check(
                abelianize(&to_b_basis(&klein_braid::kerg::special_t(k, r)).unwrap())
                    == closed_t_ab(k, r),
                || format!("T abelian closed form fails at k={k}, r={r}"),
            );
        }
        s.check(
            from_b_basis(&closed_i_word(k)) == klein_braid::kerg::special_i(k),
            || format!("I word closed form fails at k={k}"),
        );
        s.check(
            abelianize(&to_b_basis(&klein_braid::kerg::special_i(k)).unwrap()) == closed_i_ab(k),
            || format!("I abelian closed form fails at k={k}"),
        );
        for l in -g..=g {
            s.check(
                abelianize(&to_b_basis(&klein_braid::kerg::special_o(k, l)).unwrap())
                    == closed_o_ab(k, l),
                || format!("O abelian closed form fails at k={k}, l={l}"),
            );
            s.check(
                abelianize(&to_b_basis(&klein_braid::kerg::special_j(k, l)).unwrap())
                    == closed_j_ab(k, l),
                || format!("J abelian closed form fails at k={k}, l={l}"),
            );
        }
    }
    for k in -cfg.j_grid..=cfg.j_grid {
        for l in -cfg.j_grid..=cfg.j_grid {
            s.check(
                from_b_basis(&closed_j_word(k, l)) == klein_braid::kerg::special_j(k, l),
                || format!("J word closed form fails at k={k}, l={l}"),
            );
        }
    }
    // Induced maps against word-level counterparts.
    for _ in 0..cfg.cases {
        let x = random_kernel_word(&mut rng, 5, 3);
        let ab = abelianize(&to_b_basis(&x).unwrap());
        let m = rng.gen_range(-3..=3);
        let n = rng.gen_range(-3..=3);
        s.check(
            theta_ab(m, n, &ab) == abelianize(&to_b_basis(&theta(m, n, &x)).unwrap()),
            || format!("theta_ab inconsistent at m={m}, n={n} on {x}"),
        );
        s.check(
            rho_ab(&ab) == abelianize(&to_b_basis(&rho(&x)).unwrap()),
            || format!("rho_ab inconsistent on {x}"),
        );
        let p = rng.gen_range(-3..=3);
        let q = rng.gen_range(-3..=3);
        s.check(
            c_ab(p, q, &ab) == abelianize(&to_b_basis(&c_pq(p, q, &x).unwrap()).unwrap()),
            || format!("c_ab inconsistent at p={p}, q={q} on {x}"),
        );
    }
    // Explicit conjugators.
    let cg = cfg.conj_grid;
    'conj: for k in -cg..=cg {
        for l in -cg..=cg {
            let bkl = word_bkl(k, l);
            let (lambda, t) = conj_data_rho(k, l);
            if !s.check(
                in_kerg(&lambda) && rho(&bkl) == conj(&lambda, &word_bkl(t.k, t.l).pow(t.sign)),
                || format!("rho conjugator identity fails at k={k}, l={l}"),
            ) {
                break 'conj;
            }
            for m in -cg..=cg {
                for n in -cg..=cg {
                    let (gamma, t) = conj_data_theta(m, n, k, l);
                    if !s.check(
                        in_kerg(&gamma)
                            && theta(m, n, &bkl) == conj(&gamma, &word_bkl(t.k, t.l).pow(t.sign)),
                        || format!("theta conjugator identity fails at m={m}, n={n}, k={k}, l={l}"),
                    ) {
                        break 'conj;
                    }
                    let (eta, t) = conj_data_c(m, n, k, l);
                    if !s.check(
                        in_kerg(&eta)
                            && c_pq(m, n, &bkl).unwrap()
                                == conj(&eta, &word_bkl(t.k, t.l).pow(t.sign)),
                        || format!("c conjugator identity fails at p={m}, q={n}, k={k}, l={l}"),
                    ) {
                        break 'conj;
                    }
                }
            }
        }
    }
    // Surjectivity of theta on the kernel.
    for k in -3i64..=3 {
        for l in -3i64..=3 {
            for m in -3i64..=3 {
                for n in 0i64..=1 {
                    let prefix = FreeWord::gen_pow(Gen::V, k).mul(&FreeWord::gen_pow(Gen::U, l));
                    let qi = Pi1K::new(m, n).inv();
                    let pre = conj(&theta(qi.m, qi.n, &prefix), &word_b().pow(eps(n)));
                    s.check(in_kerg(&pre) && theta(m, n, &pre) == word_bkl(k, l), || {
                        format!("theta preimage of B_{{{k},{l}}} fails at m={m}, n={n}")
                    });
                }
            }
        }
    }
    s.finish("kerg")
}

fn suite_obstruction(cfg: &SelftestConfig) -> SuiteOutcome {
    let mut s = Suite::new();
    let g = cfg.obstruction_grid;
    'outer: for n1 in -3i64..=4 {
        for r2 in -g..=g {
            if r2 == 0 {
                continue;
            }
            for k in -g..=g {
                for l in -g..=g {
                    let x = AbKerG::term(k, l, 1);
                    if !s.check(!xi(n1, r2, &mu_ab(n1, r2, &x)).unwrap(), || {
                        format!("xi∘mu != 0 at n1={n1}, r2={r2}, B_{{{k},{l}}}")
                    }) {
                        break 'outer;
                    }
                }
            }
            for m1 in -3i64..=3 {
                for r1 in 0..=g {
                    if r1 != 0 && val2(r1).unwrap() <= val2(r2).unwrap() {
                        continue;
                    }
                    for k in -g..=g {
                        for l in -g..=g {
                            let x = AbKerG::term(k, l, 1);
                            if !s.check(!xi(n1, r2, &nu_ab(m1, n1, r1, r2, &x)).unwrap(), || {
                                format!(
                                    "xi∘nu != 0 at m1={m1}, n1={n1}, r1={r1}, r2={r2}, \
                                         B_{{{k},{l}}}"
                                )
                            }) {
                                break 'outer;
                            }
                        }
                    }
                }
            }
            // Case values: exactly one of the three terms maps to 1.
            let dn = delta(n1);
            let j = xi(n1, r2, &closed_j_ab(n1 - 1, -2 * r2)).unwrap();
            let o = xi(n1, r2, &closed_o_ab(n1 - 1, 2 * dn * r2)).unwrap();
            let t = xi(n1, r2, &closed_t_ab(2 * dn * r2, dn)).unwrap();
            s.check(
                j == (dn == 0) && o == (dn == 1 && n1 != 1) && t == (n1 == 1),
                || format!("case values wrong at n1={n1}, r2={r2}: J={j}, O={o}, T={t}"),
            );
        }
    }
    for sp in 0i64..=1 {
        for m1 in -4i64..=4 {
            for n1 in -4i64..=4 {
                s.check(obstruction_check_type2(sp, m1, n1), || {
                    format!("type-2 obstruction silent at s={sp}, m1={m1}, n1={n1}")
                });
            }
        }
    }
    for r2 in -g..=g {
        if r2 == 0 {
            continue;
        }
        for r1 in 0..=g {
            if r1 != 0 && val2(r1).unwrap() <= val2(r2).unwrap() {
                continue;
            }
            for m1 in -3i64..=3 {
                for n1 in -3i64..=4 {
                    s.check(obstruction_check_type4(r1, r2, m1, n1).unwrap(), || {
                        format!("type-4 obstruction silent at r1={r1}, r2={r2}, m1={m1}, n1={n1}")
                    });
                }
            }
        }
    }
    // Window counting behind the valuation argument.
    for r in -16i64..=16 {
        if r == 0 {
            continue;
        }
        let e = val2(r).unwrap();
        let o = odd_part(r).unwrap();
        for offset in -32i64..32 {
            let count = (offset..offset + 2 * r.abs())
                .filter(|&x| x == 0 || x.trailing_zeros() > e)
                .count() as i64;
            s.check(count == o, || {
                format!("window at {offset} for r={r} has {count} multiples, expected {o}")
            });
        }
    }
    s.finish("obstruction")
}

fn suite_witness(cfg: &SelftestConfig) -> SuiteOutcome {
    let mut s = Suite::new();
    let sg = cfg.witness_s_grid;
    let rg = cfg.witness_r_grid;
    'outer: for s1 in 0..=sg {
        for s2 in 0..=sg {
            let mut forms = vec![
                HomNormalForm::Type1 { i: 0, s1, s2 },
                HomNormalForm::Type2 { i: 0, s1, s2 },
                HomNormalForm::Type3 { i: 0, s1, s2 },
            ];
            for r1 in 0..=rg {
                for r2 in -rg..=rg {
                    forms.push(HomNormalForm::Type4 { r1, s1, r2, s2 });
                }
            }
            for nf in forms {
                let verdict = classify(&nf);
                match generate_witness(&nf) {
                    Witness::Generated { a, b } => {
                        if !s.check(!verdict.has_bu, || {
                            format!("witness generated for BU class {nf:?}")
                        }) {
                            break 'outer;
                        }
                        if !s.check(verify_witness(&nf.pair(), &a, &b).all(), || {
                            format!("witness fails verification for {nf:?}: a={a}, b={b}")
                        }) {
                            break 'outer;
                        }
                    }
                    Witness::NotApplicableBU => {
                        if !s.check(verdict.has_bu, || {
                            format!("witness refused for non-BU class {nf:?}")
                        }) {
                            break 'outer;
                        }
                    }
                    Witness::UnsupportedI1 => {
                        if !s.check(false, || format!("unexpected i=1 status for {nf:?}")) {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    // Classifier/obstruction coherence on BU classes.
    for s1 in 0..=sg {
        for s2 in 0..=sg {
            for r1 in 0..=rg {
                for r2 in -rg..=rg {
                    let nf = HomNormalForm::Type4 { r1, s1, r2, s2 };
                    if !classify(&nf).has_bu {
                        continue;
                    }
                    for m1 in -3i64..=3 {
                        for n1 in -3i64..=4 {
                            s.check(obstruction_check_type4(r1, r2, m1, n1).unwrap(), || {
                                format!(
                                    "obstruction silent for BU class {nf:?} at m1={m1}, n1={n1}"
                                )
                            });
                        }
                    }
                }
            }
            // Type 3 reduces to f10 = (0, 2s1 mod 4), f01 = (0, 1).
            let sp = s1.rem_euclid(2);
            for m1 in -4i64..=4 {
                for n1 in -4i64..=4 {
                    s.check(obstruction_check_type2(sp, m1, n1), || {
                        format!("type-2 obstruction silent for s={sp}, m1={m1}, n1={n1}")
                    });
                }
            }
        }
    }
    s.finish("witness")
}

fn suite_product_replay(cfg: &SelftestConfig) -> SuiteOutcome {
    let mut s = Suite::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 4);
    let b_w = word_b();
    for _ in 0..cfg.cases {
        let a1 = rng.gen_range(-3i64..=3);
        let a2 = rng.gen_range(-3i64..=3);
        let b1 = rng.gen_range(-3i64..=3);
        let (m1, n1) = (rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3));
        let (m2, n2) = (rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3));
        let x = random_kernel_word(&mut rng, 3, 2);
        let y = random_kernel_word(&mut rng, 3, 2);
        let a = P2Elem::new(
            FreeWord::gen_pow(Gen::U, a1)
                .mul(&FreeWord::gen_pow(Gen::V, a2))
                .mul(&x),
            Pi1K::new(m1, n1),
        );
        let b = P2Elem::new(FreeWord::gen_pow(Gen::U, b1).mul(&y), Pi1K::new(m2, n2));

        let ba_closed = FreeWord::gen_pow(Gen::U, b1)
            .mul(&y)
            .mul(&b_w.pow(m2 - delta(n2)))
            .mul(&FreeWord::gen_pow(Gen::U, a1 * eps(n2)))
            .mul(
                &b_w.pow(delta(n2))
                    .mul(&FreeWord::v())
                    .mul(&FreeWord::gen_pow(Gen::U, -2 * m2))
                    .pow(a2),
            )
            .mul(&b_w.pow(delta(n2) - m2))
            .mul(&theta(m2, delta(n2), &x));
        s.check(b.mul(&a).w == ba_closed, || {
            format!("closed p_F(ba) mismatch at a={a}, b={b}")
        });

        let alsb_closed = FreeWord::gen_pow(Gen::U, a1)
            .mul(&FreeWord::gen_pow(Gen::V, a2))
            .mul(&x)
            .mul(&b_w.pow(m1 - delta(n1)))
            .mul(
                &b_w.pow(eps(n1))
                    .mul(&FreeWord::gen_pow(Gen::U, -eps(n1)))
                    .pow(b1),
            )
            .mul(&b_w.pow(-eps(n1) * b1 + delta(n1) - m1))
            .mul(&theta(m1 + eps(n1) * b1, delta(n1), &rho(&y)))
            .mul(&b_w.pow(delta(n2) * eps(n1)));
        s.check(a.mul(&l_sigma(&b)).w == alsb_closed, || {
            format!("closed p_F(a l_sigma(b)) mismatch at a={a}, b={b}")
        });
    }
    s.finish("product-replay")
}

/// Runs every suite in a fixed order.
pub fn run_all(cfg: &SelftestConfig) -> Vec<SuiteOutcome> {
    vec![
        suite_word(cfg),
        suite_pi1k(cfg),
        suite_p2(cfg),
        suite_kerg(cfg),
        suite_obstruction(cfg),
        suite_witness(cfg),
        suite_product_replay(cfg),
    ]
}

/// Formats the report; returns the text and whether every suite passed.
pub fn report(cfg: &SelftestConfig) -> (String, bool) {
    let outcomes = run_all(cfg);
    let mut out = format!("selftest seed={} cases={}\n", cfg.seed, cfg.cases);
    let mut ok = true;
    for o in &outcomes {
        let dots = ".".repeat(24usize.saturating_sub(o.name.len()));
        match &o.failure {
            None => {
                out.push_str(&format!("{} {} ok ({} checks)\n", o.name, dots, o.checks));
            }
            Some(case) => {
                ok = false;
                out.push_str(&format!(
                    "{} {} FAIL\n  counterexample: {}\n",
                    o.name, dots, case
                ));
            }
        }
    }
    if ok {
        out.push_str("all suites passed\n");
    } else {
        out.push_str("selftest failed\n");
    }
    (out, ok)
}
