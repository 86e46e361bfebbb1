//! Parsers and decoders of `wq-core`: accepted inputs must round-trip.

use wq_core::central::CoreData;
use wq_core::modules::Label;
use wq_core::smodule::SModuleSpec;
use wq_core::wgen::WGenSet;
use wq_core::yangian::{GammaF, YGen};
use wq_core::{GaussianRational, RationalSeries, UhElement};

pub fn scalar(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = text.parse::<GaussianRational>() {
        let back: GaussianRational = v.to_string().parse().expect("rendered scalar parses");
        assert_eq!(back, v);
    }
    if let Ok(list) = GaussianRational::parse_list(text) {
        let rendered: Vec<String> = list.iter().map(ToString::to_string).collect();
        assert_eq!(GaussianRational::parse_list(&rendered.join(",")).expect("rendered list parses"), list);
    }
}

/// The first byte selects the arity `1..=8`.
pub fn uh_element(data: &[u8]) {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let arity = usize::from(first % 8) + 1;
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(a) = UhElement::parse(text, arity) {
        let back = UhElement::parse(&a.render(), arity).expect("rendered element parses");
        assert_eq!(back, a);
    }
}

pub fn labels(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(l) = text.parse::<Label>() {
        assert_eq!(l.to_string().parse::<Label>().expect("rendered label parses"), l);
    }
    if let Ok(g) = text.parse::<YGen>() {
        assert_eq!(g.to_string().parse::<YGen>().expect("rendered generator parses"), g);
    }
}

fn round_trip<T>(text: &str)
where
    T: serde::Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug,
{
    if let Ok(v) = serde_json::from_str::<T>(text) {
        let json = serde_json::to_string(&v).expect("serializable");
        assert_eq!(serde_json::from_str::<T>(&json).expect("own output decodes"), v);
    }
}

/// The first byte selects the decoded type.
pub fn json_decoders(data: &[u8]) {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    match first % 7 {
        0 => round_trip::<GaussianRational>(text),
        1 => round_trip::<SModuleSpec>(text),
        2 => round_trip::<RationalSeries>(text),
        3 => round_trip::<GammaF>(text),
        4 => round_trip::<YGen>(text),
        5 => round_trip::<CoreData>(text),
        _ => {
            // generator sets are large; bound the arity before decoding
            if text.len() < 4096 {
                round_trip::<WGenSet>(text);
            }
        }
    }
}
