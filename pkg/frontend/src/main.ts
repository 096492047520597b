import { HttpSessionApi } from "./api.js";
import { ExplorerViewModel } from "./viewmodel.js";
import { QpDocument } from "./types.js";

const serverUrl =
  new URLSearchParams(window.location.search).get("server") ?? "http://127.0.0.1:8787";
const vm = new ExplorerViewModel(new HttpSessionApi(serverUrl));

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function toast(message: string): void {
  const box = el<HTMLDivElement>("toast");
  box.textContent = message;
  box.classList.add("visible");
  setTimeout(() => box.classList.remove("visible"), 2600);
}

function renderAll(): void {
  el<HTMLDivElement>("graph").innerHTML = vm.renderSvg();
  const terms = vm.potentialPanel();
  el<HTMLUListElement>("potential").innerHTML = terms.length
    ? terms.map((t) => `<li>${t}</li>`).join("")
    : "<li><em>zero potential</em></li>";
  el<HTMLOListElement>("history").innerHTML = vm.historyEntries
    .map((h) => `<li>mutate at ${h.vertex}${h.reduce ? " (reduced)" : ""}</li>`)
    .join("");
  const writable = vm.writesEnabled();
  el<HTMLButtonElement>("undo").disabled = !writable;
  el<HTMLButtonElement>("jacobian-btn").disabled = !writable;
  el<HTMLButtonElement>("export-btn").disabled = vm.document === null;
  for (const node of document.querySelectorAll<SVGGElement>("#graph g.vertex")) {
    node.addEventListener("click", () => {
      const vertex = node.getAttribute("data-vertex");
      if (vertex) void onVertexClick(vertex);
    });
  }
}

async function onVertexClick(vertex: string): Promise<void> {
  const ok = await vm.clickVertex(vertex);
  if (!ok && vm.lastError) {
    toast(vm.lastError.code);
  }
  renderAll();
}

el<HTMLInputElement>("file").addEventListener("change", async (event) => {
  const input = event.target as HTMLInputElement;
  const file = input.files?.[0];
  if (!file) return;
  try {
    const doc = JSON.parse(await file.text()) as QpDocument;
    await vm.loadDocument(doc);
  } catch (error) {
    toast(vm.lastError?.code ?? String(error));
  }
  renderAll();
});

el<HTMLInputElement>("reduce").addEventListener("change", (event) => {
  vm.reduceEnabled = (event.target as HTMLInputElement).checked;
});

el<HTMLButtonElement>("undo").addEventListener("click", async () => {
  await vm.undo();
  if (vm.lastError) toast(vm.lastError.code);
  renderAll();
});

el<HTMLButtonElement>("jacobian-btn").addEventListener("click", async () => {
  const maxLen = Number(el<HTMLInputElement>("max-len").value || "4");
  const table = await vm.showJacobian(maxLen);
  if (!table) {
    if (vm.lastError) toast(vm.lastError.code);
    return;
  }
  el<HTMLDivElement>("jacobian").innerHTML =
    "<table><tr><th>length</th><th>dim</th></tr>" +
    table.dims.map((d, i) => `<tr><td>${i}</td><td>${d}</td></tr>`).join("") +
    `</table><p>total ${table.total}; stabilized: ${table.stabilized}</p>`;
});

el<HTMLButtonElement>("export-btn").addEventListener("click", () => {
  const blob = new Blob([vm.exportCurrent()], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = "quiver-with-potential.json";
  link.click();
  URL.revokeObjectURL(link.href);
});

renderAll();
