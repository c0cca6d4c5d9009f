use rackalg::grp::GroupCocycle2;
use rackalg::hopf::{extend_group_cocycle, lifted_algebra, ql_datum, verify_hopf_cocycle};
use rackalg::hopf::cocycle::TripleMode;
use rackalg::ncpoly::ParamScalar;
use std::time::Instant;

fn main() {
    let d = ql_datum("q4m", &[ParamScalar::zero(), ParamScalar::one()]).unwrap();
    let h = lifted_algebra(&d, 14).unwrap();
    let sigma = GroupCocycle2::clifford(4);
    let table = extend_group_cocycle(&sigma, &h).unwrap();
    let t = Instant::now();
    let rep = verify_hopf_cocycle(&h, &table, TripleMode::Sample { count: 200, seed: 7 }).unwrap();
    eprintln!("verify 200: passed={} in {:?}", rep.passed, t.elapsed());
    for v in &rep.violations { eprintln!("  {v}"); }
}
