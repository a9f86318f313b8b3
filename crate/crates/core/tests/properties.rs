use std::sync::Arc;

use arq_core::fixtures::GridFixture;
use arq_core::verify::{check_with, Property};
use arq_core::{ARQuiver, DynkinQuiver, Kind, RootSystem, SeqCalc};

fn sweep(kind: Kind, rank: usize, properties: &[Property]) {
    let s = Arc::new(RootSystem::new(kind, rank).unwrap());
    for q in DynkinQuiver::all(&s) {
        let arq = ARQuiver::build(&q);
        let calc = SeqCalc::new(arq.class());
        for &p in properties {
            let report = check_with(p, &arq, &calc).unwrap();
            assert!(report.is_ok(), "{kind}{rank} {report}");
        }
    }
}

#[test]
fn type_a() {
    for rank in 1..=5 {
        sweep(Kind::A, rank, &Property::ALL);
    }
}

#[test]
fn type_d() {
    for rank in 4..=5 {
        sweep(Kind::D, rank, &Property::ALL);
    }
}

#[test]
fn type_e6() {
    let props: Vec<Property> = Property::ALL.into_iter().filter(|p| p.applies_to(Kind::E)).collect();
    sweep(Kind::E, 6, &props);
}

#[test]
fn e7_e8_radius_bound_on_appendix_quivers() {
    for name in ["e7-appendix", "e8-appendix"] {
        let arq = ARQuiver::build(&GridFixture::load(name).unwrap().quiver().unwrap());
        let calc = SeqCalc::new(arq.class());
        for p in [Property::RdsBound, Property::DirectlyConnected, Property::SocleShape] {
            let report = check_with(p, &arq, &calc).unwrap();
            assert!(report.is_ok(), "{name} {report}");
            assert!(report.checked > 0);
        }
    }
}
