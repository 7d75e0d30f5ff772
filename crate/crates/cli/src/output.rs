use findep::report::Report;

/// What a command produced: the structured report and, for commands whose
/// natural text form is not a list of results, a preformatted body.
/// `data` is attached to the JSON form under the key `data`.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub body: Option<String>,
    pub data: Option<serde_json::Value>,
}

impl Outcome {
    pub fn new(report: Report) -> Self {
        Outcome { report, body: None, data: None }
    }

    pub fn with_data(mut self, data: serde_json::Value) -> Self {
        self.data = Some(data);
        self
    }

    pub fn with_body(mut self, body: String) -> Self {
        self.body = Some(body);
        self
    }
}

/// Text form: the first result bare, later results as `key: value`, then
/// one line per check.
pub fn render_text(outcome: &Outcome) -> String {
    let r = &outcome.report;
    let mut out = String::new();
    match &outcome.body {
        Some(body) => {
            out.push_str(body);
            if !body.ends_with('\n') {
                out.push('\n');
            }
        }
        None => {
            for (i, (key, value)) in r.results.iter().enumerate() {
                if i == 0 {
                    out.push_str(&format!("{value}\n"));
                } else {
                    out.push_str(&format!("{key}: {value}\n"));
                }
            }
        }
    }
    for c in &r.checks {
        let mark = if c.passed { "ok" } else { "FAILED" };
        out.push_str(&format!("{mark}: {} [{} cases]", c.name, c.cases));
        if !c.detail.is_empty() {
            out.push_str(&format!(" {}", c.detail));
        }
        out.push('\n');
    }
    if let Some(ms) = r.runtime_ms {
        out.push_str(&format!("runtime: {ms} ms\n"));
    }
    out
}

pub fn emit(outcome: &Outcome, json: bool) {
    if json {
        let mut doc = serde_json::to_value(&outcome.report).expect("report serializes");
        if let (Some(data), Some(map)) = (&outcome.data, doc.as_object_mut()) {
            map.insert("data".into(), data.clone());
        }
        println!("{}", serde_json::to_string_pretty(&doc).expect("value serializes"));
    } else {
        print!("{}", render_text(outcome));
    }
}

pub fn emit_error(message: &str, code: u8, json: bool) {
    if json {
        let v = serde_json::json!({ "error": message, "exit_code": code });
        println!("{v}");
    } else {
        eprintln!("error: {message}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use findep::report::Check;

    #[test]
    fn text_layout() {
        let mut r = Report::new("t");
        r.result("value", "-1/2").result("memo_size", 3);
        let mut bad = Check::new("second");
        bad.record(false, || "x != y".into());
        r.checks([Check::new("first"), bad]);
        assert_eq!(
            render_text(&Outcome::new(r.clone())),
            "-1/2\nmemo_size: 3\nok: first [0 cases]\nFAILED: second [1 cases] x != y\n"
        );
        let body = render_text(&Outcome::new(r).with_body("a\nb".into()));
        assert!(body.starts_with("a\nb\nok: first"));
    }
}
