import init, { analyze_lasso, classify_dictionary, encode_tree } from "./pkg/omega_power_web.js";

const $ = (id) => document.getElementById(id);

function show(target, json) {
  const v = JSON.parse(json);
  $(target).textContent = v.error ? `error: ${v.error}` : JSON.stringify(v, null, 2);
}

await init();

$("analyze").onclick = () => show("lasso-out", analyze_lasso($("dict").value, $("lasso").value));
$("classify").onclick = () => show("classify-out", classify_dictionary($("dict").value));
$("encode").onclick = () => show("tree-out", encode_tree($("tree").value));
$("sample-clopen").onclick = () => {
  $("dict").value = "alphabet 2\nmain = {0, 01, 11, 111}";
  $("classify").click();
};
$("lasso").onkeydown = (e) => { if (e.key === "Enter") $("analyze").click(); };
