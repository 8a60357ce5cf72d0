import init, {
  classify_magma, abstraction_orders, enumerate_profiles, builtin_table, builtin_names,
} from "./pkg/abstractdd_web.js";

const $ = (id) => document.getElementById(id);

function unwrap(json, target) {
  const r = JSON.parse(json);
  if (!r.ok) {
    target.innerHTML = `<p class="no">${escape(r.error)}</p>`;
    return null;
  }
  return r.value;
}

function escape(s) {
  return String(s).replace(/[&<>]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;" })[c]);
}

function law(name, l) {
  const verdict = l.holds ? `<span class="yes">yes</span>` : `<span class="no">no</span>`;
  const w = l.witness ? `, witness <code>${escape(l.witness)}</code>` : "";
  return `<li>${name}: ${verdict}${w}</li>`;
}

function classify() {
  const out = $("laws");
  const v = unwrap(classify_magma($("table").value), out);
  if (!v) return;
  out.innerHTML = `<ul>
    ${law("commutative", v.commutative)}
    ${law("associative", v.associative)}
    ${law("medial", v.medial)}
    <li>unit: ${v.unit === null ? "none" : escape(v.unit)}</li>
  </ul>`;
}

function orders() {
  const out = $("order-results");
  const v = unwrap(abstraction_orders($("table").value, $("values").value, $("vars").value), out);
  if (!v) return;
  const rows = v.results.map((r) => `<tr>
      <td>${r.order.join(" ")}</td><td>${r.orders}</td>
      <td>${r.constant !== null ? `<code>${escape(r.constant)}</code>` : `<pre>${escape(r.dump)}</pre>`}</td>
    </tr>`).join("");
  const summary = v.results.length === 1
    ? `all ${v.total_orders} orders agree`
    : `<span class="no">${v.results.length} distinct results</span> from ${v.total_orders} orders`;
  out.innerHTML = `<p>${summary} (medial law ${v.medial ? "holds" : "fails"})</p>
    <table><tr><th>first order</th><th>orders</th><th>result</th></tr>${rows}</table>`;
}

function enumerate() {
  const out = $("profiles");
  const v = unwrap(enumerate_profiles(Number($("size").value), $("filters").value, 2), out);
  if (!v) return;
  if (v.length === 0) {
    out.innerHTML = "<p>No table matches.</p>";
    return;
  }
  out.innerHTML = v.map((p) => `<h3>${escape(p.profile)}: ${p.count}</h3>
    ${p.examples.map((e) => `<pre>${escape(e)}</pre>`).join("")}`).join("");
}

function loadBuiltin() {
  const v = unwrap(builtin_table($("builtin").value), $("laws"));
  if (v) $("table").value = v;
}

await init();
const select = $("builtin");
for (const name of JSON.parse(builtin_names())) {
  select.add(new Option(name, name, name === "tamura", name === "tamura"));
}
select.addEventListener("change", loadBuiltin);
$("classify").addEventListener("click", classify);
$("orders").addEventListener("click", orders);
$("enumerate").addEventListener("click", enumerate);
loadBuiltin();
classify();
