use qwiso::gi::{compare_graphs, GiConfig, PhaseScheme};
use qwiso::families;
use std::time::Instant;

#[test]
fn timing_probe() {
    let a = families::gq33_point_graph();
    let b = families::gq33_line_graph();

    let t0 = Instant::now();
    let full = compare_graphs(&a, &b, &GiConfig::default()).unwrap();
    let t_full = t0.elapsed();

    let t0 = Instant::now();
    let simple = compare_graphs(&a, &b, &GiConfig::with_scheme(PhaseScheme::simple_pi())).unwrap();
    let t_simple = t0.elapsed();

    let t0 = Instant::now();
    let r16 = compare_graphs(
        &families::rook_4x4(),
        &families::shrikhande(),
        &GiConfig::default(),
    )
    .unwrap();
    let t_16 = t0.elapsed();

    eprintln!("GQ full:    {t_full:?} verdict={:?} certs={:?}/{:?}", full.verdict, full.certificate_a, full.certificate_b);
    eprintln!("GQ simple:  {t_simple:?} verdict={:?} certs={:?}/{:?}", simple.verdict, simple.certificate_a, simple.certificate_b);
    eprintln!("SRG16 full: {t_16:?} verdict={:?} certs={:?}/{:?}", r16.verdict, r16.certificate_a, r16.certificate_b);
    eprintln!("rook rows: {:?}", r16.table_aa.as_ref().map(|t| {
        let mut rows = t.rows.clone();
        rows.sort_unstable();
        rows.dedup();
        rows
    }));
}
