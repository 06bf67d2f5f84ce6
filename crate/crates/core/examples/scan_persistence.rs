//! Rigidity scan records written to JSONL, reopened, and recomputed from their parameters.

use faclab::inversion::{grid_points, rigidity_scan_point};
use faclab::records::{read_records, rerun, rigidity_params, JsonlStore, RecordKind, ScanRecord};
use faclab::GaussianRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::temp_dir().join("faclab-example-rigidity.jsonl");
    let _ = std::fs::remove_file(&path);
    let grid: Vec<GaussianRational> = (-1..=1).map(GaussianRational::from).collect();
    let mut store = JsonlStore::open(&path)?;
    for alpha in grid_points(&grid, 2).into_iter().filter(|a| a.iter().any(|x| *x != GaussianRational::from(0))) {
        let params = rigidity_params(&alpha, 10);
        let result = serde_json::to_value(rigidity_scan_point(&alpha, 10)?)?;
        store.append(&ScanRecord::new(RecordKind::Rigidity, params, result))?;
    }
    drop(store);

    let records = read_records(&path)?;
    let reproduced = records.iter().all(|r| rerun(r.kind, &r.params).map(|v| v == r.result).unwrap_or(false));
    println!("{} records in {}, all reproduce: {reproduced}", records.len(), path.display());
    println!("{}", serde_json::to_string(&records[0])?);
    std::fs::remove_file(&path)?;
    Ok(())
}
