// DOM wiring for the single-page similarity meter. All state lives in
// the controllers; this file only translates views into elements.

import { ApiClient } from "./api.js";
import { CheckController, CheckView } from "./checker.js";
import { debounce } from "./debounce.js";
import { StoreController, StoreView } from "./storeview.js";

const DEBOUNCE_MS = 300;

const params = new URLSearchParams(window.location.search);
const origin = params.get("service") ?? "http://127.0.0.1:8470";

const api = new ApiClient(origin);

const candidateInput = document.getElementById("candidate") as HTMLInputElement;
const banner = document.getElementById("banner") as HTMLElement;
const rowsContainer = document.getElementById("rows") as HTMLElement;
const labelInput = document.getElementById("new-label") as HTMLInputElement;
const passwordInput = document.getElementById("new-password") as HTMLInputElement;
const addButton = document.getElementById("add-button") as HTMLButtonElement;
const storeList = document.getElementById("store-list") as HTMLElement;
const storeError = document.getElementById("store-error") as HTMLElement;

const BANNER_TEXT: Record<CheckView["banner"], string> = {
  neutral: "Type a candidate password to compare it with your history.",
  accept: "Looks different enough from your stored passwords.",
  warn: "Too similar to a stored password — pick something else.",
  offline: "Service unreachable — retrying…",
};

function renderCheck(view: CheckView): void {
  banner.className = `banner ${view.banner}`;
  banner.textContent = BANNER_TEXT[view.banner];
  rowsContainer.replaceChildren(
    ...view.rows.map((row) => {
      const el = document.createElement("div");
      el.className = "row";
      const above = view.threshold !== null && row.delta >= view.threshold;
      el.innerHTML = `
        <span class="label"></span>
        <span class="meter"><span class="bar ${above ? "hot" : ""}"
              style="width:${row.barWidth}%"></span></span>
        <span class="delta">${row.delta.toFixed(2)}</span>`;
      (el.querySelector(".label") as HTMLElement).textContent = row.label;
      return el;
    }),
  );
}

function renderStore(view: StoreView): void {
  storeError.textContent = view.error ?? "";
  if (view.empty) {
    storeList.innerHTML = "<li class='empty'>No stored passwords yet — add one below.</li>";
    return;
  }
  storeList.replaceChildren(
    ...view.entries.map((entry) => {
      const li = document.createElement("li");
      li.textContent = `${entry.label} (added ${entry.created_at})`;
      return li;
    }),
  );
}

const checker = new CheckController(api, renderCheck);
const store = new StoreController(api, renderStore);

candidateInput.addEventListener(
  "input",
  debounce(() => checker.submit(candidateInput.value), DEBOUNCE_MS),
);

addButton.addEventListener("click", async () => {
  if (!labelInput.value || !passwordInput.value) return;
  await store.add(labelInput.value, passwordInput.value);
  labelInput.value = "";
  passwordInput.value = "";
});

void store.refresh();
