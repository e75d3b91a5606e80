use super::{Check, CheckOutcome, GroupContext, Relation};
use crate::corpus::TAG_INVERSE_FREE;
use crate::predicates::{
    char_mult_condition, class_character_agreement, class_product_condition, class_size_condition,
    commuting_condition, coset_class_implications, inverse_class_product_condition,
    multiplicative_structure, nonvanishing_off, order_product_condition, pi_condition,
    triple_condition, Evaluation, PairMode, PredicateError, Witness,
};
use crate::primes::{prime_divisors, prime_power_info};

/// `72` or `q(q − 1)` for a prime power `q > 2`.
fn inverse_free_order(order: usize) -> bool {
    order == 72
        || (3..=order)
            .take_while(|q| q * (q - 1) <= order)
            .any(|q| q * (q - 1) == order && prime_power_info(q).is_some())
}

/// Runs one check, restricting per-prime outcomes to `prime` when given.
pub fn run_check(
    ctx: &GroupContext,
    check: Check,
    prime: Option<usize>,
) -> Result<Vec<CheckOutcome>, PredicateError> {
    let cd = &ctx.classes;
    let g = ctx.group();
    let nilpotent = ctx.structure.is_nilpotent;
    let primes: Vec<usize> = match prime {
        Some(p) => vec![p],
        None => prime_divisors(g.order()),
    };
    let eval = Evaluation::ClassPairs;
    let mut out = Vec::new();
    match check {
        Check::OrderProduct => {
            for (property, mode) in [
                ("order_product_all_coprime", PairMode::AllCoprime),
                ("order_product_prime_power", PairMode::PrimePower),
            ] {
                let res = order_product_condition(cd, &mode, eval)?;
                out.push(
                    CheckOutcome::new(check, property, vec![], Relation::Iff, res.holds, nilpotent)
                        .with_witness(cd, res.witness),
                );
            }
        }
        Check::ClassSizeProduct => {
            let res = class_size_condition(cd, None, eval)?;
            out.push(
                CheckOutcome::new(
                    check,
                    "class_size_product",
                    vec![],
                    Relation::Iff,
                    res.holds,
                    nilpotent,
                )
                .with_witness(cd, res.witness),
            );
            let res = commuting_condition(cd, &PairMode::PrimePower, eval)?;
            out.push(
                CheckOutcome::new(
                    check,
                    "coprime_commuting",
                    vec![],
                    Relation::Iff,
                    res.holds,
                    nilpotent,
                )
                .with_witness(cd, res.witness),
            );
            let sylows_normal = prime_divisors(g.order())
                .into_iter()
                .all(|p| g.normal_hall_parts(p).normal_sylow_p.is_some());
            out.push(CheckOutcome::new(
                check,
                "normal_sylows",
                vec![],
                Relation::Iff,
                sylows_normal,
                nilpotent,
            ));
        }
        Check::SylowDirectFactor => {
            for &p in &primes {
                let res = class_size_condition(cd, Some(p), eval)?;
                let parts = g.normal_hall_parts(p);
                let direct = parts.normal_sylow_p.is_some() && parts.normal_hall_p_prime.is_some();
                out.push(
                    CheckOutcome::new(
                        check,
                        "class_size_product_p",
                        vec![p],
                        Relation::Iff,
                        res.holds,
                        direct,
                    )
                    .with_witness(cd, res.witness),
                );
            }
        }
        Check::ClassProduct => {
            let res = class_product_condition(cd, None, eval)?;
            out.push(
                CheckOutcome::new(
                    check,
                    "class_product",
                    vec![],
                    Relation::Implies,
                    res.holds,
                    ctx.structure.is_solvable,
                )
                .with_witness(cd, res.witness),
            );
        }
        Check::PClassProduct => {
            for &p in &primes {
                let res = class_product_condition(cd, Some(p), eval)?;
                out.push(
                    CheckOutcome::new(
                        check,
                        "class_product_p",
                        vec![p],
                        Relation::Implies,
                        res.holds,
                        g.is_p_solvable(p),
                    )
                    .with_witness(cd, res.witness),
                );
            }
        }
        Check::ClassCharacterEquivalence => {
            let disagreement = (0..cd.len())
                .flat_map(|i| (0..cd.len()).map(move |j| (i, j)))
                .map(|(i, j)| class_character_agreement(&ctx.table, i, j))
                .find(|o| !o.holds());
            let agree = disagreement.is_none();
            out.push(
                CheckOutcome::new(
                    check,
                    "set_and_character_sides_agree",
                    vec![],
                    Relation::Holds,
                    agree,
                    agree,
                )
                .with_witness(
                    cd,
                    disagreement.map(|o| Witness::ClassPair {
                        left: o.left,
                        right: o.right,
                    }),
                ),
            );
        }
        Check::TripleProduct => {
            for &p in &primes {
                let res = triple_condition(cd, p)?;
                out.push(
                    CheckOutcome::new(
                        check,
                        "no_coprime_triple",
                        vec![p],
                        Relation::Iff,
                        res.holds,
                        g.is_p_solvable(p),
                    )
                    .with_witness(cd, res.witness),
                );
            }
        }
        Check::CharacterProduct => {
            let verdict = multiplicative_structure(g);
            if prime.is_none() {
                let res = char_mult_condition(&ctx.table, None, eval)?;
                out.push(
                    CheckOutcome::new(
                        check,
                        "character_product",
                        vec![],
                        Relation::Iff,
                        res.holds,
                        verdict.holds,
                    )
                    .with_witness(cd, res.witness),
                );
            }
            for &p in &primes {
                let res = char_mult_condition(&ctx.table, Some(p), eval)?;
                let per_prime = verdict.prime(p);
                // a prime not dividing the order makes G a p′-group
                let reference = per_prime.is_none_or(|v| v.holds);
                out.push(
                    CheckOutcome::new(
                        check,
                        "character_product_p",
                        vec![p],
                        Relation::Iff,
                        res.holds,
                        reference,
                    )
                    .with_witness(cd, res.witness),
                );
                if let Some(w) = per_prime.and_then(|v| v.passing()) {
                    let bad = nonvanishing_off(&ctx.table, &w.h);
                    out.push(
                        CheckOutcome::new(
                            check,
                            "nonlinear_vanish_off_normal_part",
                            vec![p],
                            Relation::Holds,
                            bad.is_none(),
                            bad.is_none(),
                        )
                        .with_witness(cd, bad.map(|(row, _)| Witness::Row { row })),
                    );
                }
            }
        }
        Check::MultiplicativeClassPair => {
            let derived = g.derived_subgroup();
            let mut failure = None;
            'outer: for i in 1..cd.len() {
                for j in 1..cd.len() {
                    let o = coset_class_implications(&ctx.table, &derived, i, j)?;
                    if !o.holds() {
                        failure = Some(Witness::ClassPair { left: i, right: j });
                        break 'outer;
                    }
                }
            }
            let ok = failure.is_none();
            out.push(
                CheckOutcome::new(
                    check,
                    "multiplicative_pair_consequences",
                    vec![],
                    Relation::Holds,
                    ok,
                    ok,
                )
                .with_witness(cd, failure),
            );
        }
        Check::PiClassProduct => {
            let chief = g.chief_series();
            let odd: Vec<usize> = prime_divisors(g.order())
                .into_iter()
                .filter(|&p| p != 2)
                .collect();
            for (k, &p) in odd.iter().enumerate() {
                for &q in &odd[k + 1..] {
                    if prime.is_some_and(|r| r != p && r != q) {
                        continue;
                    }
                    let o = pi_condition(cd, &chief, p, q)?;
                    out.push(
                        CheckOutcome::new(
                            check,
                            "pi_class_product",
                            vec![p, q],
                            Relation::Implies,
                            o.hypothesis.holds,
                            o.conclusion,
                        )
                        .with_witness(cd, o.hypothesis.witness),
                    );
                }
            }
        }
        Check::InverseFreeClassProduct => {
            let res = inverse_class_product_condition(cd);
            let tagged = ctx.spec.has_tag(TAG_INVERSE_FREE);
            out.push(
                CheckOutcome::new(
                    check,
                    "tagged_group_passes",
                    vec![],
                    Relation::Implies,
                    tagged,
                    res.holds,
                )
                .with_witness(cd, res.witness.clone()),
            );
            out.push(CheckOutcome::new(
                check,
                "nonnilpotent_passing_order",
                vec![],
                Relation::Implies,
                res.holds && !nilpotent,
                inverse_free_order(g.order()),
            ));
        }
    }
    Ok(out)
}
