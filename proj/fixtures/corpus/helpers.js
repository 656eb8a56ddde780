// debounce approach from https://chatgpt.com/share/22222222-2222-4222-8222-222222222222
export function debounce(fn, ms) {
  let timer = null;
  return (...args) => {
    clearTimeout(timer);
    timer = setTimeout(() => fn(...args), ms);
  };
}

// range check per https://chat.openai.com/share/33333333-3333-4333-8333-333333333333
export function clamp(value, lo, hi) {
  return Math.min(Math.max(value, lo), hi);
}
