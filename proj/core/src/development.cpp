namespace cgc {}
