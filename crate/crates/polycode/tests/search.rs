use std::collections::BTreeMap;

use polycode::search::{run_search, write_csv, write_json, SearchJob, SearchRecord};
use polycode::text::parse_field;
use polycode_core::equiv::class_representatives;
use polycode_core::{AmbientSpace, Elem, FieldRef};

fn all_values(f: &FieldRef, m: usize) -> Vec<Vec<Elem>> {
    let nz: Vec<Elem> = f.nonzero_by_log().collect();
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|v| nz.iter().map(move |&a| [v.clone(), vec![a]].concat()))
            .collect();
    }
    out
}

fn multiset(records: &[SearchRecord]) -> BTreeMap<(usize, usize, Option<usize>), usize> {
    let mut m = BTreeMap::new();
    for r in records {
        *m.entry((r.n, r.k, r.d)).or_insert(0) += 1;
    }
    m
}

#[test]
fn class_members_give_the_same_parameters() {
    for (field, n, support) in [("3", 12, vec![0, 1, 7]), ("2^2", 9, vec![0, 3]), ("5", 8, vec![0, 4]), ("3", 9, vec![0, 2, 5])] {
        let f = parse_field(field).unwrap();
        let idx = class_representatives(&f, n, &support).unwrap();
        let mut per_class: Vec<Option<BTreeMap<_, _>>> = vec![None; idx.reps.len()];
        for v in all_values(&f, support.len()) {
            let space = AmbientSpace::from_support(&f, n, &support, &v).unwrap();
            let class = idx.class_of(&space).unwrap();
            let mut job = SearchJob::new(&f, n, &support).unwrap();
            job.representatives = Some(vec![v.clone()]);
            let records = run_search(&job).unwrap();
            for r in &records {
                assert!(r.rebuild().unwrap().shift_check());
                assert!(r.d.is_some());
            }
            let m = multiset(&records);
            match &per_class[class] {
                Some(seen) => assert_eq!(seen, &m, "{field} n={n} {v:?}"),
                None => per_class[class] = Some(m),
            }
        }
    }
}

#[test]
fn searches_are_deterministic() {
    let f = parse_field("2^2").unwrap();
    let job = SearchJob::new(&f, 15, &[0, 2, 12]).unwrap();
    let render = || {
        let records = run_search(&job).unwrap();
        let mut json = Vec::new();
        let mut csv = Vec::new();
        write_json(&records, &mut json).unwrap();
        write_csv(&records, &mut csv).unwrap();
        (json, csv)
    };
    let first = render();
    assert_eq!(first, render());
    let parsed: Vec<SearchRecord> = serde_json::from_slice(&first.0).unwrap();
    assert_eq!(parsed, run_search(&job).unwrap());
    let lines = String::from_utf8(first.1).unwrap();
    assert!(lines.starts_with("class_polynomial,generator,parameters,method,griesmer,best_known"));
    assert_eq!(lines.lines().count(), parsed.len() + 1);
}

#[test]
fn records_are_sorted_and_consistent() {
    let f = parse_field("3").unwrap();
    let records = run_search(&SearchJob::new(&f, 12, &[0, 1, 7]).unwrap()).unwrap();
    assert!(records.windows(2).all(|w| (w[0].k, w[0].d) >= (w[1].k, w[1].d)));
    for r in &records {
        let p = r.params().unwrap();
        assert!(p.satisfies_singleton() && p.satisfies_griesmer());
        assert_eq!(r.griesmer, Some(p.griesmer()));
    }
    // the whole space and the repetition-like codes are always present
    assert_eq!(records[0].k, 12);
    assert!(records.iter().any(|r| r.k == 2 && r.d == Some(9)));
}

#[test]
fn generator_cap_limits_records() {
    let f = parse_field("3").unwrap();
    let mut job = SearchJob::new(&f, 12, &[0, 1, 7]).unwrap();
    job.max_generators = Some(2);
    assert_eq!(run_search(&job).unwrap().len(), 4 * 2);
}
