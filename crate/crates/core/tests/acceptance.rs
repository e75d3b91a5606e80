//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::{Arc, LazyLock};
use std::time::{Duration, Instant};

use coprime_kit::chartab::CharacterTable;
use coprime_kit::classes::ClassData;
use coprime_kit::corpus::{default_corpus, Corpus, GroupSpec, TAG_C_NOT_NORMAL, TAG_INVERSE_FREE};
use coprime_kit::predicates::{
    char_mult_condition, class_character_agreement, class_product_condition, class_size_condition,
    coset_class_implications, inverse_class_product_condition, multiplicative_structure,
    nonvanishing_off, order_product_condition, pi_condition, triple_condition, Evaluation,
    PairMode, Witness,
};
use coprime_kit::primes::{gcd, is_power_of, prime_divisors, prime_power_info};
use coprime_kit::Group;

const MIN_CORPUS_SIZE: usize = 25;
const MAX_CORPUS_ORDER: usize = 2000;
const SUITE_TIME_LIMIT: Duration = Duration::from_secs(300);
const ORACLE_ORDER_LIMIT: usize = 200;
const ODD_PRIMES: [usize; 5] = [3, 5, 7, 11, 13];

struct Entry {
    spec: GroupSpec,
    classes: Arc<ClassData>,
    table: CharacterTable,
}

impl Entry {
    fn group(&self) -> &Arc<Group> {
        self.classes.group()
    }

    fn name(&self) -> &str {
        &self.spec.name
    }
}

struct Analysis {
    corpus: Corpus,
    entries: Vec<Entry>,
    build_time: Duration,
}

static ANALYSIS: LazyLock<Analysis> = LazyLock::new(|| {
    let start = Instant::now();
    let corpus = default_corpus();
    let entries = corpus
        .entries()
        .iter()
        .map(|(spec, g)| {
            let classes = Arc::new(ClassData::new(g.clone()));
            let table = CharacterTable::compute(classes.clone())
                .unwrap_or_else(|e| panic!("{}: {e}", spec.name));
            Entry {
                spec: spec.clone(),
                classes,
                table,
            }
        })
        .collect();
    Analysis {
        corpus,
        entries,
        build_time: start.elapsed(),
    }
});

fn entry(name: &str) -> &'static Entry {
    ANALYSIS
        .entries
        .iter()
        .find(|e| e.name() == name)
        .unwrap_or_else(|| panic!("{name} missing from the default corpus"))
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn class_with(cd: &ClassData, order: usize, size: usize) -> usize {
    (0..cd.len())
        .find(|&c| cd.element_order(c) == order && cd.size(c) == size)
        .expect("class present")
}

fn sylow_direct_factor(g: &Group, p: usize) -> bool {
    let parts = g.normal_hall_parts(p);
    parts.normal_sylow_p.is_some() && parts.normal_hall_p_prime.is_some()
}

fn table_validity() -> Result<String, String> {
    let a = &*ANALYSIS;
    check(a.entries.len() >= MIN_CORPUS_SIZE, || {
        format!(
            "corpus has {} groups, need {MIN_CORPUS_SIZE}",
            a.entries.len()
        )
    })?;
    let max_order = a
        .entries
        .iter()
        .map(|e| e.group().order())
        .max()
        .unwrap_or(0);
    check(max_order <= MAX_CORPUS_ORDER, || {
        format!("largest order {max_order}")
    })?;
    for e in &a.entries {
        let (t, cd) = (&e.table, &e.classes);
        let n = e.group().order();
        let r = cd.len();
        check(t.len() == r, || {
            format!("{}: {} rows for {r} classes", e.name(), t.len())
        })?;
        let degree_sum: u64 = t.degrees().iter().map(|d| d * d).sum();
        check(degree_sum == n as u64, || {
            format!("{}: Σχ(1)² = {degree_sum}", e.name())
        })?;
        check(
            t.degrees().iter().all(|&d| (n as u64).is_multiple_of(d)),
            || format!("{}: degree not dividing the order", e.name()),
        )?;
        for x in 0..r {
            for y in 0..r {
                let mut row_sum = t.int(0);
                for k in 0..r {
                    let term = t.value(x, k) * &t.value(y, k).conj();
                    row_sum = &row_sum + &(&term * cd.size(k) as i64);
                }
                let expected = if x == y { n as i64 } else { 0 };
                check(row_sum == t.int(expected), || {
                    format!("{}: row orthogonality fails at ({x}, {y})", e.name())
                })?;
                let mut col_sum = t.int(0);
                for row in 0..r {
                    col_sum = &col_sum + &(t.value(row, x) * &t.value(row, y).conj());
                }
                let expected = if x == y {
                    cd.centralizer_order(x) as i64
                } else {
                    0
                };
                check(col_sum == t.int(expected), || {
                    format!("{}: column orthogonality fails at ({x}, {y})", e.name())
                })?;
            }
        }
    }
    Ok(format!(
        "{} groups, orders 1..={max_order}, tables built in {:.2?}",
        a.entries.len(),
        a.build_time
    ))
}

fn known_tables() -> Result<String, String> {
    let s3 = entry("S3");
    check(s3.table.degrees() == vec![1, 1, 2], || {
        format!("S3 degrees {:?}", s3.table.degrees())
    })?;
    let cd = &s3.classes;
    let (id, tr, three) = (0, class_with(cd, 2, 3), class_with(cd, 3, 2));
    let values: Vec<i64> = [id, tr, three]
        .iter()
        .map(|&c| s3.table.value(2, c).as_int().expect("rational value"))
        .collect();
    check(values == vec![2, 0, -1], || {
        format!("S3 degree-2 row {values:?}")
    })?;
    let q8 = entry("Q8");
    check(q8.table.degrees() == vec![1, 1, 1, 1, 2], || {
        format!("Q8 degrees {:?}", q8.table.degrees())
    })?;
    let central = class_with(&q8.classes, 2, 1);
    let v = q8.table.value(4, central).as_int();
    check(v == Some(-2), || {
        format!("Q8 degree-2 value on the central involution {v:?}")
    })?;
    Ok("S3 (2, 0, -1); Q8 degrees 1,1,1,1,2 with -2 at the central involution".into())
}

fn class_size_equivalence() -> Result<String, String> {
    let mut per_prime = 0;
    for e in &ANALYSIS.entries {
        let g = e.group();
        let nilpotent = g.is_nilpotent();
        let res = class_size_condition(&e.classes, None, Evaluation::ClassPairs).unwrap();
        check(res.holds == nilpotent, || {
            format!(
                "{}: class-size condition {} but nilpotent {nilpotent}",
                e.name(),
                res.holds
            )
        })?;
        for p in prime_divisors(g.order()) {
            let res = class_size_condition(&e.classes, Some(p), Evaluation::ClassPairs).unwrap();
            let direct = sylow_direct_factor(g, p);
            check(res.holds == direct, || {
                format!(
                    "{}, p = {p}: condition {} but direct factor {direct}",
                    e.name(),
                    res.holds
                )
            })?;
            per_prime += 1;
        }
    }
    Ok(format!(
        "{} groups, {per_prime} (group, prime) pairs",
        ANALYSIS.entries.len()
    ))
}

fn order_product_equivalence() -> Result<String, String> {
    for e in &ANALYSIS.entries {
        let nilpotent = e.group().is_nilpotent();
        for mode in [PairMode::AllCoprime, PairMode::PrimePower] {
            let res = order_product_condition(&e.classes, &mode, Evaluation::ClassPairs).unwrap();
            check(res.holds == nilpotent, || {
                format!(
                    "{}, {mode:?}: condition {} but nilpotent {nilpotent}",
                    e.name(),
                    res.holds
                )
            })?;
        }
    }
    Ok(format!(
        "{} groups, both pair modes",
        ANALYSIS.entries.len()
    ))
}

fn class_product_implications() -> Result<String, String> {
    let (mut global, mut local) = (0, 0);
    for e in &ANALYSIS.entries {
        let g = e.group();
        if class_product_condition(&e.classes, None, Evaluation::ClassPairs)
            .unwrap()
            .holds
        {
            global += 1;
            check(g.is_solvable(), || {
                format!("{} passes but is not solvable", e.name())
            })?;
        }
        for p in prime_divisors(g.order()) {
            if class_product_condition(&e.classes, Some(p), Evaluation::ClassPairs)
                .unwrap()
                .holds
            {
                local += 1;
                check(g.is_p_solvable(p), || {
                    format!("{} passes at p = {p} but is not p-solvable", e.name())
                })?;
            }
        }
    }
    check(global > 0 && local > 0, || {
        "hypotheses never satisfied".into()
    })?;
    Ok(format!(
        "hypothesis held for {global} groups and {local} (group, prime) pairs"
    ))
}

fn class_character_equivalence() -> Result<String, String> {
    let (mut pairs, mut single) = (0, 0);
    for e in &ANALYSIS.entries {
        let r = e.classes.len();
        for i in 0..r {
            for j in 0..r {
                let out = class_character_agreement(&e.table, i, j);
                check(out.holds(), || {
                    format!(
                        "{}: classes ({i}, {j}) set {} character {}",
                        e.name(),
                        out.set_side,
                        out.character_side
                    )
                })?;
                pairs += 1;
                single += usize::from(out.set_side);
            }
        }
    }
    Ok(format!(
        "{pairs} class pairs agree ({single} single-class products)"
    ))
}

fn triple_equivalence() -> Result<String, String> {
    let mut count = 0;
    for e in &ANALYSIS.entries {
        let g = e.group();
        for p in prime_divisors(g.order()) {
            let res = triple_condition(&e.classes, p).unwrap();
            let solvable = g.is_p_solvable(p);
            check(res.holds == solvable, || {
                format!(
                    "{}, p = {p}: no-triple {} but p-solvable {solvable}",
                    e.name(),
                    res.holds
                )
            })?;
            count += 1;
        }
    }
    let a5 = entry("A5");
    let g = a5.group();
    for p in [2, 3, 5] {
        let res = triple_condition(&a5.classes, p).unwrap();
        let Some(Witness::Triple { x, y, z }) = res.witness else {
            return Err(format!("A5, p = {p}: no triple found"));
        };
        let q = prime_power_info(g.element_order(y)).map(|(q, _)| q);
        let r = prime_power_info(g.element_order(z)).map(|(r, _)| r);
        check(
            g.mul(g.mul(x, y), z) == 0
                && x != 0
                && is_power_of(g.element_order(x), p)
                && q.is_some()
                && r.is_some()
                && q != r
                && q != Some(p)
                && r != Some(p),
            || format!("A5, p = {p}: triple does not replay"),
        )?;
    }
    Ok(format!(
        "{count} (group, prime) pairs; A5 triples at p = 2, 3, 5"
    ))
}

fn character_product_equivalence() -> Result<String, String> {
    let (mut per_prime, mut vanishing) = (0, 0);
    for e in &ANALYSIS.entries {
        let g = e.group();
        let verdict = multiplicative_structure(g);
        let res = char_mult_condition(&e.table, None, Evaluation::ClassPairs).unwrap();
        check(res.holds == verdict.holds, || {
            format!(
                "{}: character condition {} but structure {}",
                e.name(),
                res.holds,
                verdict.holds
            )
        })?;
        for v in &verdict.per_prime {
            let res = char_mult_condition(&e.table, Some(v.p), Evaluation::ClassPairs).unwrap();
            check(res.holds == v.holds, || {
                format!(
                    "{}, p = {}: character condition {} but structure {}",
                    e.name(),
                    v.p,
                    res.holds,
                    v.holds
                )
            })?;
            per_prime += 1;
            for w in [&v.sylow_form, &v.hall_form]
                .into_iter()
                .flatten()
                .filter(|w| w.holds())
            {
                let bad = nonvanishing_off(&e.table, &w.h);
                check(bad.is_none(), || {
                    format!("{}, p = {}: row nonzero off H at {bad:?}", e.name(), v.p)
                })?;
                vanishing += 1;
            }
        }
    }
    check(vanishing > 0, || "no structure-passing group".into())?;
    Ok(format!(
        "{} groups, {per_prime} (group, prime) pairs, vanishing verified for {vanishing} structures",
        ANALYSIS.entries.len()
    ))
}

fn structure_witnesses() -> Result<String, String> {
    // Q8 is the 2-part of the point stabilizer SL(2,3) inside SL(2,3) ⋉ C3²
    let big = entry("SL23:3^2");
    let g = big.group();
    let stabilizer: Vec<usize> = (0..g.order())
        .filter(|&x| g.element(x).apply(0) == 0)
        .collect();
    let q8 = g.subgroup_generated(
        stabilizer
            .iter()
            .copied()
            .filter(|&x| 4 % g.element_order(x) == 0),
    );
    let translations = g.p_core(3);
    check(q8.order() == 8 && translations.order() == 9, || {
        format!(
            "subgroups of orders {} and {}",
            q8.order(),
            translations.order()
        )
    })?;
    let involutions = q8
        .members()
        .iter()
        .filter(|&&x| g.element_order(x) == 2)
        .count();
    check(involutions == 1, || {
        format!("{involutions} involutions in the order-8 subgroup")
    })?;
    check(
        g.is_frobenius_action(&q8, &translations) == Ok(true),
        || "Q8 action on C3 x C3 is not Frobenius".into(),
    )?;

    let o54 = entry("order54");
    check(o54.spec.has_tag(TAG_C_NOT_NORMAL), || {
        "order54 untagged".into()
    })?;
    let verdict = multiplicative_structure(o54.group());
    let w = verdict
        .sylow_witness()
        .ok_or("order54 has no passing structure")?;
    check(verdict.holds && w.flags.all() && !w.c_normal, || {
        format!("order54 flags {:?}, c_normal {}", w.flags, w.c_normal)
    })?;

    let mut passing = Vec::new();
    for name in ["Q8:3^2", "AGL1_3", "AGL1_4", "AGL1_5", "AGL1_8"] {
        let e = entry(name);
        check(inverse_class_product_condition(&e.classes).holds, || {
            format!("{name} fails the class-product property")
        })?;
        passing.push(name);
    }
    for e in ANALYSIS
        .entries
        .iter()
        .filter(|e| e.spec.has_tag(TAG_INVERSE_FREE))
    {
        check(inverse_class_product_condition(&e.classes).holds, || {
            format!("tagged {} fails", e.name())
        })?;
    }
    Ok(format!(
        "Frobenius Q8 on C3xC3; order54 with C not normal; {} pass",
        passing.join(", ")
    ))
}

fn multiplicative_pair_consequences() -> Result<String, String> {
    let mut satisfied = 0;
    for e in &ANALYSIS.entries {
        let g = e.group();
        let derived = g.derived_subgroup();
        let r = e.classes.len();
        for i in 1..r {
            for j in 1..r {
                let out = coset_class_implications(&e.table, &derived, i, j).unwrap();
                if let Some(c) = out.conclusions {
                    check(c.all(), || {
                        format!("{}: classes ({i}, {j}) give {c:?}", e.name())
                    })?;
                    satisfied += 1;
                }
            }
        }
    }
    check(satisfied > 0, || {
        "no hypothesis-satisfying class pair".into()
    })?;
    Ok(format!(
        "{satisfied} hypothesis-satisfying class pairs, all conclusions hold"
    ))
}

fn pi_class_products() -> Result<String, String> {
    let mut count = 0;
    for e in &ANALYSIS.entries {
        let chief = e.group().chief_series();
        for (k, &p) in ODD_PRIMES.iter().enumerate() {
            for &q in &ODD_PRIMES[k + 1..] {
                let out = pi_condition(&e.classes, &chief, p, q).unwrap();
                check(out.holds, || {
                    format!("{}, (p, q) = ({p}, {q}): implication fails", e.name())
                })?;
                count += 1;
            }
        }
    }
    let a5 = entry("A5");
    let g = a5.group();
    let out = pi_condition(&a5.classes, &a5.group().chief_series(), 3, 5).unwrap();
    check(!out.conclusion && !out.hypothesis.holds, || {
        "A5 (3, 5) does not fail as expected".into()
    })?;
    let Some(Witness::SplitProduct { x, y, y_conj }) = out.hypothesis.witness else {
        return Err("A5 (3, 5): no violating pair".into());
    };
    let prime = |e: usize| prime_power_info(g.element_order(e)).map(|(p, _)| p);
    let in_pi = |p: Option<usize>| p.is_some_and(|p| [2, 3, 5].contains(&p));
    let xy_class = g.conjugacy_orbit(g.mul(x, y));
    check(
        in_pi(prime(x))
            && in_pi(prime(y))
            && gcd(g.element_order(x), g.element_order(y)) == 1
            && g.conjugacy_orbit(y).contains(&y_conj)
            && !xy_class.contains(&g.mul(x, y_conj)),
        || "A5 violating pair does not replay".into(),
    )?;
    Ok(format!(
        "{count} (group, p, q) implications; A5 (3, 5) violating pair replayed"
    ))
}

fn oracle_equivalence() -> Result<String, String> {
    let mut groups = 0;
    for e in ANALYSIS
        .entries
        .iter()
        .filter(|e| e.group().order() <= ORACLE_ORDER_LIMIT)
    {
        let g = e.group();
        let mut primes: Vec<Option<usize>> = vec![None];
        primes.extend(prime_divisors(g.order()).into_iter().map(Some));
        for &p in &primes {
            let both = |f: &dyn Fn(Evaluation) -> bool, what: &str| {
                let (fast, slow) = (f(Evaluation::ClassPairs), f(Evaluation::Elements));
                check(fast == slow, || {
                    format!(
                        "{}, {what}, p = {p:?}: class pairs {fast}, elements {slow}",
                        e.name()
                    )
                })
            };
            both(
                &|ev| class_size_condition(&e.classes, p, ev).unwrap().holds,
                "class sizes",
            )?;
            both(
                &|ev| class_product_condition(&e.classes, p, ev).unwrap().holds,
                "class products",
            )?;
            both(
                &|ev| char_mult_condition(&e.table, p, ev).unwrap().holds,
                "characters",
            )?;
        }
        for mode in [PairMode::AllCoprime, PairMode::PrimePower] {
            let fast = order_product_condition(&e.classes, &mode, Evaluation::ClassPairs)
                .unwrap()
                .holds;
            let slow = order_product_condition(&e.classes, &mode, Evaluation::Elements)
                .unwrap()
                .holds;
            check(fast == slow, || {
                format!("{}, orders {mode:?}: {fast} vs {slow}", e.name())
            })?;
        }
        groups += 1;
    }
    Ok(format!("{groups} groups of order <= {ORACLE_ORDER_LIMIT}"))
}

type Criterion = (&'static str, fn() -> Result<String, String>);

const CRITERIA: [Criterion; 12] = [
    ("character tables are valid", table_validity),
    ("known small tables", known_tables),
    (
        "class-size condition iff nilpotent / Sylow direct factor",
        class_size_equivalence,
    ),
    (
        "order-product condition iff nilpotent",
        order_product_equivalence,
    ),
    (
        "class-product condition implies (p-)solvable",
        class_product_implications,
    ),
    (
        "class products agree with character form",
        class_character_equivalence,
    ),
    ("no coprime triple iff p-solvable", triple_equivalence),
    (
        "character condition iff structure",
        character_product_equivalence,
    ),
    (
        "Frobenius, non-normal C and class-product witnesses",
        structure_witnesses,
    ),
    (
        "multiplicative class pairs force a coset class",
        multiplicative_pair_consequences,
    ),
    (
        "pi class products exclude pq chief factors",
        pi_class_products,
    ),
    (
        "class-pair evaluation matches element oracle",
        oracle_equivalence,
    ),
];

fn main() -> ExitCode {
    let start = Instant::now();
    let mut failures = 0;
    panic::set_hook(Box::new(|_| {}));
    for (k, (name, run)) in CRITERIA.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|payload| {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    let elapsed = start.elapsed();
    let in_time = elapsed < SUITE_TIME_LIMIT;
    println!(
        "suite time {elapsed:.2?} (limit {SUITE_TIME_LIMIT:?}) {}",
        if in_time { "PASS" } else { "FAIL" }
    );
    println!("corpus: {}", ANALYSIS.corpus.names().join(", "));
    if failures == 0 && in_time {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
