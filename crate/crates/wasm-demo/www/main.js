import init, { q_function, eigen, omega3_spectrum } from "./pkg/qschur_wasm.js";

const $ = (id) => document.getElementById(id);

function guarded(out, f) {
  try {
    f();
    out.classList.remove("bad");
  } catch (e) {
    out.textContent = e.message ?? String(e);
    out.classList.add("bad");
  }
}

function spectrumTable(rows) {
  const table = $("s-out");
  table.replaceChildren();
  const head = table.insertRow();
  for (const h of ["λ", "|λ|", "eigenvalue", "Σλ³ − |λ|²", "eigenfunction"]) {
    const th = document.createElement("th");
    th.textContent = h;
    head.appendChild(th);
  }
  for (const r of rows) {
    const tr = table.insertRow();
    for (const v of [r.partition || "∅", r.weight, r.eigenvalue, r.expected, r.isEigen ? "yes" : "no"]) {
      tr.insertCell().textContent = v;
    }
    if (!r.isEigen || r.eigenvalue !== r.expected) tr.classList.add("bad");
  }
}

await init();

$("q-run").onclick = () =>
  guarded($("q-out"), () => {
    $("q-out").textContent = q_function($("q-lambda").value, Number($("q-n").value));
  });

$("e-run").onclick = () =>
  guarded($("e-out"), () => {
    const r = JSON.parse(eigen($("e-lambda").value, $("e-op").value, Number($("e-n").value)));
    $("e-out").textContent = r.isEigen
      ? `${r.operator} Q_(${r.partition}) = ${r.eigenvalue} · Q_(${r.partition})`
      : `Q_(${r.partition}) is not an eigenfunction of ${r.operator}`;
  });

$("s-run").onclick = () =>
  guarded($("s-out"), () => spectrumTable(JSON.parse(omega3_spectrum(Number($("s-n").value), Number($("s-w").value)))));
