//! Inputs accepted by the `wq` command line and its report reader.

use wq_cli::config::SuiteSelection;
use wq_cli::Report;

pub fn cli_inputs(data: &[u8]) {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if first % 2 == 0 {
        if let Ok(s) = text.parse::<SuiteSelection>() {
            assert_eq!(s.to_string().parse::<SuiteSelection>().expect("rendered selection parses"), s);
        }
    } else if let Ok(r) = serde_json::from_str::<Report>(text) {
        let json = serde_json::to_string(&r).expect("serializable");
        assert_eq!(serde_json::from_str::<Report>(&json).expect("own output decodes"), r);
    }
}
