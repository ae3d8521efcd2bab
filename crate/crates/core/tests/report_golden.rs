//! Byte-level goldens for the emitted tables and scans, plus stability of
//! repeated sequential runs.

use nfree::report::{
    bound_table, records_to_csv, records_to_json, unimodality_scan, verdict_to_csv,
    verdict_to_json, ReportMeta, TableMethod,
};
use nfree::solver::Budget;
use nfree::ExecMode;

const EXACT_TABLE_CSV: &str = "\
n,k,binom,code_k,prov_k,code_k1,prov_k1,kt_bound,new_bound,johnson_k,johnson_k1,optimal_k,optimal_k1
4,2,6,2,EXACT,1,EXACT,7,8,2,1,true,true
6,3,20,4,EXACT,3,EXACT,23,24,4,4,true,true
7,3,35,7,EXACT,7,EXACT,42,42,7,7,true,true
8,4,70,14,EXACT,8,EXACT,78,84,14,11,true,true
";

const GS_TABLE_CSV: &str = "\
n,k,binom,code_k,prov_k,code_k1,prov_k1,kt_bound,new_bound,johnson_k,johnson_k1,optimal_k,optimal_k1
4,2,6,2,GS,1,GS,7,8,2,1,true,true
6,3,20,4,GS,3,GS,23,24,4,4,true,false
7,3,35,5,GS,5,GS,40,40,7,7,false,false
8,4,70,10,GS,7,GS,77,80,14,11,false,false
";

const SCAN_8_CSV: &str = "\
n,k,gs_lower,johnson_upper,exact
8,3,7,8,8
8,4,10,14,14
8,5,7,11,8
";

#[test]
fn exact_table_csv_golden() {
    let method = TableMethod::Exact(Budget::UNLIMITED);
    let records = bound_table(&[4, 6, 7, 8], method, ExecMode::Sequential).unwrap();
    assert_eq!(records_to_csv(&records), EXACT_TABLE_CSV);
}

#[test]
fn gs_table_csv_golden() {
    let records = bound_table(&[4, 6, 7, 8], TableMethod::Gs, ExecMode::Sequential).unwrap();
    assert_eq!(records_to_csv(&records), GS_TABLE_CSV);
}

#[test]
fn scan_csv_golden() {
    let verdict = unimodality_scan(8, Budget::UNLIMITED, ExecMode::Sequential).unwrap();
    assert_eq!(verdict_to_csv(&verdict), SCAN_8_CSV);
    assert!(verdict.strictly_unimodal_on_exact_range);
    assert_eq!(verdict.peak_positions, vec![4]);
}

#[test]
fn sequential_outputs_are_byte_stable() {
    let method = TableMethod::Exact(Budget::UNLIMITED);
    let meta = ReportMeta::new(&method);
    let run = || {
        let records = bound_table(&[4, 6, 7], method, ExecMode::Sequential).unwrap();
        (
            records_to_csv(&records),
            records_to_json(&records, &meta),
        )
    };
    let (csv_a, json_a) = run();
    let (csv_b, json_b) = run();
    assert_eq!(csv_a, csv_b);
    assert_eq!(json_a, json_b);

    let scan = |_: ()| {
        let v = unimodality_scan(7, Budget::UNLIMITED, ExecMode::Sequential).unwrap();
        (verdict_to_csv(&v), verdict_to_json(&v, &meta))
    };
    assert_eq!(scan(()), scan(()));
}

#[test]
fn json_structure_and_envelope_strings() {
    let method = TableMethod::Exact(Budget::from_millis(60_000));
    let records = bound_table(&[4, 6, 7, 8], method, ExecMode::Sequential).unwrap();
    let json = records_to_json(&records, &ReportMeta::new(&method));
    assert!(json.ends_with('\n'));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["meta"]["tool"], "nfree");
    assert_eq!(value["meta"]["method"], "EXACT");
    assert_eq!(value["meta"]["budget_millis"], 60_000);
    assert_eq!(value["meta"]["budget_nodes"], 0);
    let recs = value["records"].as_array().unwrap();
    assert_eq!(recs.len(), 4);
    let by_n = |n: u64| {
        recs.iter()
            .find(|r| r["n"] == n)
            .unwrap_or_else(|| panic!("row n={n}"))
    };
    assert_eq!(by_n(4)["envelope"]["lower_ref"], "15/2");
    assert_eq!(by_n(4)["envelope"]["upper_ref"], "9");
    assert_eq!(by_n(6)["envelope"]["lower_ref"], "70/3");
    assert_eq!(by_n(6)["envelope"]["upper_ref"], "80/3");
    assert_eq!(by_n(7)["envelope"]["lower_ref"], "40");
    assert_eq!(by_n(7)["envelope"]["upper_ref"], "45");
    assert_eq!(by_n(8)["envelope"]["lower_ref"], "315/4");
    assert_eq!(by_n(8)["envelope"]["upper_ref"], "175/2");
    assert_eq!(by_n(8)["envelope"]["asymptotic_terms_omitted"], true);
    assert_eq!(by_n(7)["kt_bound"], 42);
    assert_eq!(by_n(7)["new_bound"], 42);
    assert_eq!(by_n(8)["prov_k"], "EXACT");
}

#[test]
fn scan_json_shape() {
    let method = TableMethod::Exact(Budget::UNLIMITED);
    let verdict = unimodality_scan(8, Budget::UNLIMITED, ExecMode::Sequential).unwrap();
    let json = verdict_to_json(&verdict, &ReportMeta::new(&method));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["scan"]["n"], 8);
    assert_eq!(value["scan"]["strictly_unimodal_on_exact_range"], true);
    assert_eq!(value["scan"]["peak_positions"], serde_json::json!([4]));
    assert_eq!(value["scan"]["entries"][1]["exact"], 14);
}
