// found at https://chatgpt.com/share/cccccccc-cccc-4ccc-8ccc-cccccccccccc
// broken paste: https://chatgpt.com/share/eeeeeeee-eeee-4eee-8eee-eeeeeeeeeee
console.log('beta');
