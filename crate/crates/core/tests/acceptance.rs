//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its headline numbers. Run with `cargo test --test acceptance`
//! (add `-- --nocapture` to see the lines).

use std::time::Instant;

use sdepth_core::construct;
use sdepth_core::decomp::{verify, Target};
use sdepth_core::harness::{run_campaign, CampaignSpec, PropertyId, Ranges};
use sdepth_core::oracle::{self, Budgets};
use sdepth_core::text::{parse_decomposition, parse_ideal};
use sdepth_core::MonomialIdeal;

fn sdepth_of(target: &Target) -> usize {
    oracle::sdepth_exact(target, None, &Budgets::default())
        .unwrap()
        .0
}

fn campaign(property: PropertyId, samples: usize, seed: u64, ranges: Ranges) {
    let spec = CampaignSpec {
        property,
        samples,
        seed,
        ranges,
    };
    let report = run_campaign(&spec, &Budgets::default(), 1).unwrap();
    assert_eq!(report.checked, samples, "{property:?} checked count");
    assert_eq!(report.skipped, 0, "{property:?} skipped samples");
    assert!(
        report.violations.is_empty(),
        "{property:?} violations: {:#?}",
        report.violations
    );
}

/// The displayed nine-slab decomposition of (x1^3, x2^2*x3^2, x1*x2^3*x3),
/// entered verbatim.
const NINE_SLABS: &str = "\
target: ideal; ideal: x1^3, x2^2*x3^2, x1*x2^3*x3; n: 3
x1^3 K[x1,x3]
x1^3*x2 K[x1,x3]
x2^2*x3^2 K[x2,x3]
x2^2*x1^3 K[x1,x2]
x1*x2^2*x3*x2 K[x2,x3]
x1*x2^2*x3*x1*x2 K[x2,x3]
x1*x2^2*x3*x1^2 K[x1,x2]
x1*x2^2*x3*x3 K[x1,x3]
x1*x2^2*x3*x1^2*x2*x3 K[x1,x2,x3]
";

#[test]
fn criterion_1_worked_example_golden() {
    let start = Instant::now();

    let golden = parse_decomposition(NINE_SLABS).unwrap();
    let report = verify(&golden);
    assert!(report.valid, "golden decomposition: {:?}", report.violation);
    assert_eq!(report.sdepth, 2, "golden sdepth");

    let ideal = parse_ideal("n=3; x1^3, x2^2*x3^2, x1*x2^3*x3").unwrap();
    let trace = construct::three_gen_ideal(&ideal).unwrap();
    let constructed = verify(&trace.result);
    assert!(constructed.valid, "{:?}", constructed.violation);
    assert_eq!(constructed.sdepth, 2, "constructed sdepth");

    let oracle_value = sdepth_of(&Target::Ideal(ideal));
    assert_eq!(oracle_value, 2, "oracle sdepth");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "criterion 1 PASS: golden 9-slab verifies (sdepth 2), construction sdepth 2, oracle 2, {:?}",
        elapsed
    );
}

#[test]
fn criterion_2_layered_quotient_bound() {
    let start = Instant::now();
    campaign(
        PropertyId::Prop12,
        200,
        0xA002,
        Ranges {
            n: 4,
            max_degree: 3,
            g: 4,
        },
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!(
        "criterion 2 PASS: janet_quotient valid with sdepth >= n - g on 200 samples, {:?}",
        elapsed
    );
}

#[test]
fn criterion_3_three_generator_ideals() {
    campaign(
        PropertyId::Thm24,
        200,
        0xA003,
        Ranges {
            n: 4,
            max_degree: 3,
            g: 3,
        },
    );
    println!(
        "criterion 3 PASS: three_gen_ideal sdepth = n - 1 on 200 samples (oracle agrees on n <= 3)"
    );
}

#[test]
fn criterion_4_gcd_transfer() {
    campaign(
        PropertyId::Thm14,
        100,
        0xA004,
        Ranges {
            n: 3,
            max_degree: 3,
            g: 3,
        },
    );
    println!(
        "criterion 4 PASS: sdepth(S/vI') = sdepth(S/I') and ideal version on 100 pairs; round trip preserves sdepth"
    );
}

#[test]
fn criterion_5_saturation_vanishing() {
    campaign(
        PropertyId::Thm21,
        200,
        0xA005,
        Ranges {
            n: 3,
            max_degree: 3,
            g: 3,
        },
    );
    campaign(
        PropertyId::Cor22,
        200,
        0xA015,
        Ranges {
            n: 3,
            max_degree: 3,
            g: 3,
        },
    );
    println!(
        "criterion 5 PASS: sdepth(S/I^k) = 0 iff I^k not saturated, k in {{1,2,3}}, 200 samples each"
    );
}

/// Companion to criterion 5, pinning why the per-power reading is the
/// right one: a saturated ideal whose square is not saturated.
#[test]
fn criterion_5_companion_powers_can_lose_saturation() {
    let triangle = parse_ideal("n=3; x1*x2, x1*x3, x2*x3").unwrap();
    assert!(triangle.saturate().1);
    let square = triangle.power(2);
    assert!(!square.saturate().1);
    assert_eq!(sdepth_of(&Target::Quotient(triangle)), 1);
    assert_eq!(sdepth_of(&Target::Quotient(square)), 0);
    println!("criterion 5 companion PASS: (x1x2, x1x3, x2x3) is saturated, its square is not");
}

#[test]
fn criterion_6_saturated_three_variable_ideals() {
    campaign(
        PropertyId::Prop32,
        150,
        0xA006,
        Ranges {
            n: 3,
            max_degree: 3,
            g: 4,
        },
    );
    campaign(
        PropertyId::Cor33,
        200,
        0xA016,
        Ranges {
            n: 3,
            max_degree: 3,
            g: 4,
        },
    );
    println!(
        "criterion 6 PASS: saturated_3var sdepth = 2 on 150 samples; sdepth(I) >= sdepth(S/I) + 1 on 200"
    );
}

#[test]
fn criterion_7_hyperplane_restrictions() {
    campaign(
        PropertyId::Lemma31,
        150,
        0xA007,
        Ranges {
            n: 3,
            max_degree: 3,
            g: 4,
        },
    );
    campaign(PropertyId::Obs34, 1, 0xA017, Ranges::default());
    println!(
        "criterion 7 PASS: saturated gcd-free samples admit a saturated restriction; the 4-variable intersection ideal does not"
    );
}

#[test]
fn criterion_8_stanley_conjecture_small_g() {
    campaign(
        PropertyId::Thm26,
        150,
        0xA008,
        Ranges {
            n: 3,
            max_degree: 3,
            g: 3,
        },
    );
    println!(
        "criterion 8 PASS: constructive and oracle sdepth dominate Koszul depth on 150 g <= 3 samples"
    );
}

#[test]
fn criterion_9_oracle_self_consistency() {
    // g-independence and witness soundness over 50 seeded samples.
    let budgets = Budgets::default();
    for seed in 0..50u64 {
        let n = 1 + (seed % 3) as usize;
        let g = if n == 1 { 1 } else { 2 + (seed % 2) as usize };
        let ideal = sdepth_core::harness::random_ideal(seed, n, 2, g).unwrap();
        let target = if seed % 2 == 0 {
            Target::Ideal(ideal)
        } else {
            Target::Quotient(ideal)
        };
        let (value, witness) = oracle::sdepth_exact(&target, None, &budgets).unwrap();

        let raised: Vec<u32> = witness.bound.iter().map(|&b| b + 1).collect();
        let (value_raised, _) = oracle::sdepth_exact(&target, Some(&raised), &budgets).unwrap();
        assert_eq!(value, value_raised, "g-independence failed at seed {seed}");

        let d = witness.to_decomposition(&target);
        let report = verify(&d);
        assert!(
            report.valid,
            "witness at seed {seed}: {:?}",
            report.violation
        );
        assert_eq!(report.sdepth, value, "witness sdepth at seed {seed}");
    }

    // depth of complete intersections: one case per (n, g), 20 in all.
    let mut cases = 0;
    for n in 2..=6usize {
        for g in 1..=n {
            let gens = (0..g)
                .map(|i| sdepth_core::Monomial::var_pow(i, (i % 3) as u32 + 1, n))
                .collect();
            let ci = MonomialIdeal::new(n, gens).unwrap();
            let depth = oracle::depth_exact(&ci, &budgets).unwrap();
            assert_eq!(depth, n - g, "CI depth at n={n}, g={g}");
            cases += 1;
        }
    }
    assert_eq!(cases, 20);
    println!(
        "criterion 9 PASS: g-independence + witness soundness on 50 samples; CI depth = n - g on 20 cases"
    );
}
